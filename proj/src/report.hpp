// Verification reports: named checks with expected/computed values and a
// provenance tag, rendered as deterministic JSON or an aligned table.

#ifndef HOMCOH_REPORT_HPP
#define HOMCOH_REPORT_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace homcoh::report {

enum class Status { pass, fail, skipped };
enum class Provenance { paper, trivial, derived };

struct Check {
    std::string name;
    Status status = Status::skipped;
    std::string expected;
    std::string computed;
    Provenance provenance = Provenance::derived;
    std::string note;  // optional detail, e.g. a budget refusal message
};

struct Suite {
    std::string name;
    std::vector<Check> checks;
};

struct Meta {
    std::string tool = "homcoh";
    std::string version;
    std::string schema = "homcoh-report-v1";
    std::uint32_t p = 3;
    std::string suite = "all";
    std::uint32_t max_degree = 8;
    std::uint32_t budget_mb = 512;
    std::uint32_t jobs = 1;
    std::uint64_t seed = 1729;
    bool strict = false;
};

struct Report {
    Meta meta;
    std::vector<Suite> suites;

    std::size_t count(Status s) const;
    std::string to_json() const;
    std::string to_table() const;
};

Check make_check(std::string name, Provenance prov, std::string expected, std::string computed,
                 bool pass);
Check make_skipped(std::string name, Provenance prov, std::string expected, std::string note);

const char* status_name(Status s);
const char* provenance_name(Provenance p);

}  // namespace homcoh::report

#endif
