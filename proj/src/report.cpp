#include "report.hpp"

#include <iomanip>
#include <sstream>

#include <json.hpp>

namespace homcoh::report {

const char* status_name(Status s) {
    switch (s) {
        case Status::pass: return "pass";
        case Status::fail: return "fail";
        default: return "skipped";
    }
}

const char* provenance_name(Provenance p) {
    switch (p) {
        case Provenance::paper: return "paper";
        case Provenance::trivial: return "trivial";
        default: return "derived";
    }
}

Check make_check(std::string name, Provenance prov, std::string expected, std::string computed,
                 bool pass) {
    Check c;
    c.name = std::move(name);
    c.provenance = prov;
    c.expected = std::move(expected);
    c.computed = std::move(computed);
    c.status = pass ? Status::pass : Status::fail;
    return c;
}

Check make_skipped(std::string name, Provenance prov, std::string expected, std::string note) {
    Check c;
    c.name = std::move(name);
    c.provenance = prov;
    c.expected = std::move(expected);
    c.computed = "";
    c.status = Status::skipped;
    c.note = std::move(note);
    return c;
}

std::size_t Report::count(Status s) const {
    std::size_t n = 0;
    for (const auto& su : suites)
        for (const auto& c : su.checks)
            if (c.status == s) ++n;
    return n;
}

std::string Report::to_json() const {
    nlohmann::ordered_json j;
    j["meta"] = {{"tool", meta.tool},         {"version", meta.version},
                 {"schema", meta.schema},     {"p", meta.p},
                 {"suite", meta.suite},       {"max_degree", meta.max_degree},
                 {"budget_mb", meta.budget_mb}, {"jobs", meta.jobs},
                 {"seed", meta.seed},         {"strict", meta.strict}};
    j["suites"] = nlohmann::ordered_json::array();
    for (const auto& su : suites) {
        nlohmann::ordered_json js;
        js["name"] = su.name;
        js["checks"] = nlohmann::ordered_json::array();
        for (const auto& c : su.checks) {
            nlohmann::ordered_json jc;
            jc["name"] = c.name;
            jc["status"] = status_name(c.status);
            jc["expected"] = c.expected;
            jc["computed"] = c.computed;
            jc["provenance"] = provenance_name(c.provenance);
            if (!c.note.empty()) jc["note"] = c.note;
            js["checks"].push_back(std::move(jc));
        }
        j["suites"].push_back(std::move(js));
    }
    j["summary"] = {{"passed", count(Status::pass)},
                    {"failed", count(Status::fail)},
                    {"skipped", count(Status::skipped)}};
    return j.dump(2) + "\n";
}

std::string Report::to_table() const {
    std::size_t wname = 4, wexp = 8, wcomp = 8;
    for (const auto& su : suites)
        for (const auto& c : su.checks) {
            wname = std::max(wname, su.name.size() + c.name.size() + 1);
            wexp = std::max(wexp, c.expected.size());
            wcomp = std::max(wcomp, c.computed.size());
        }
    std::ostringstream os;
    os << std::left;
    os << std::setw(8) << "STATUS" << std::setw(static_cast<int>(wname) + 2) << "CHECK"
       << std::setw(static_cast<int>(wexp) + 2) << "EXPECTED"
       << std::setw(static_cast<int>(wcomp) + 2) << "COMPUTED"
       << "TAG" << "\n";
    for (const auto& su : suites)
        for (const auto& c : su.checks) {
            os << std::setw(8) << status_name(c.status)
               << std::setw(static_cast<int>(wname) + 2) << (su.name + ":" + c.name)
               << std::setw(static_cast<int>(wexp) + 2) << c.expected
               << std::setw(static_cast<int>(wcomp) + 2) << c.computed
               << provenance_name(c.provenance);
            if (!c.note.empty()) os << "  (" << c.note << ")";
            os << "\n";
        }
    os << "passed " << count(Status::pass) << ", failed " << count(Status::fail) << ", skipped "
       << count(Status::skipped) << "\n";
    return os.str();
}

}  // namespace homcoh::report
