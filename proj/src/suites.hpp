// Named verification suites over the example families, shared by the C API
// and the command line front end. Each suite returns a list of checks with
// expected and computed values; budget refusals become skipped checks.

#ifndef HOMCOH_SUITES_HPP
#define HOMCOH_SUITES_HPP

#include <vector>

#include "anick.hpp"
#include "barcoh.hpp"
#include "lhs.hpp"
#include "report.hpp"

namespace homcoh::suites {

inline constexpr const char* kVersion = "1.0.0";

struct Options {
    std::uint32_t p = 3;
    std::string suite = "all";
    std::uint32_t max_degree = 8;
    std::uint32_t budget_mb = 512;
    std::uint32_t jobs = 1;
    std::uint64_t seed = 1729;
    bool strict = false;
};

const std::vector<std::string>& suite_names();

// Throws std::invalid_argument on a bad modulus or unknown suite.
report::Report run(const Options& opt);

// Helpers behind the C API.
std::vector<freealg::Word> chain_set(const std::string& family, std::uint32_t p, std::size_t n);
std::string chain_set_rendered(const std::string& family, std::uint32_t p, std::size_t n);
std::vector<std::uint32_t> anick_ext_dims(const std::string& family, std::uint32_t p,
                                          std::size_t max_n);
std::uint32_t bar_ext_dim(const std::string& family, std::uint32_t p, std::uint32_t n,
                          std::uint64_t budget_mb);
std::string export_presentation(const std::string& family, std::uint32_t p);

}  // namespace homcoh::suites

#endif
