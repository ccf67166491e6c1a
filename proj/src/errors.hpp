#ifndef HOMCOH_ERRORS_HPP
#define HOMCOH_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace homcoh {

// A computation declined because it would exceed the configured memory
// budget. Callers usually turn this into a skipped check.
struct BudgetError : std::runtime_error {
    explicit BudgetError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace homcoh

#endif
