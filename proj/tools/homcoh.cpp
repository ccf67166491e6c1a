// Command line front end. Talks to the engine exclusively through the C API.
//
// Exit codes: 0 all non-skipped checks pass (with --strict: and none
// skipped), 1 check failures, 2 usage errors, 3 runtime errors.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "homcoh.h"

namespace {

struct ContextGuard {
    hc_context* ctx = nullptr;
    ContextGuard() { hc_context_create(&ctx); }
    ~ContextGuard() { hc_context_destroy(ctx); }
};

struct StringGuard {
    char* s = nullptr;
    ~StringGuard() { hc_string_free(s); }
};

int report_error(hc_context* ctx, hc_status st) {
    std::cerr << "homcoh: " << hc_status_name(st) << ": " << hc_last_error(ctx) << "\n";
    return st == HC_ERROR_INVALID_ARGUMENT ? 2 : 3;
}

bool write_output(const std::string& path, const char* text) {
    if (path.empty()) {
        std::cout << text;
        return true;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) return false;
    f << text;
    return static_cast<bool>(f);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"cohomology engine for finite dimensional augmented algebras"};
    app.require_subcommand(1);

    // verify
    auto* verify = app.add_subcommand("verify", "run a verification suite and print the report");
    std::uint32_t p = 3, max_degree = 8, budget_mb = 512, jobs = 1;
    std::uint64_t seed = 1729;
    std::string suite = "all", format = "table", out_path;
    bool strict = false;
    verify->add_option("--p", p, "odd prime characteristic")->capture_default_str();
    verify->add_option("--suite", suite, "groebner|anick|bar|classes|action|lhs|all")
        ->capture_default_str();
    verify->add_option("--max-degree", max_degree, "resolution depth")->capture_default_str();
    verify->add_option("--budget-mb", budget_mb, "memory budget for bar matrices")
        ->capture_default_str();
    verify->add_option("--format", format, "table|json")->capture_default_str();
    verify->add_option("--out", out_path, "write the report to a file instead of stdout");
    verify->add_option("--jobs", jobs, "worker threads for independent checks")
        ->capture_default_str();
    verify->add_option("--seed", seed, "seed for randomized property checks")
        ->capture_default_str();
    verify->add_flag("--strict", strict, "treat skipped checks as failures");

    // chains
    auto* chains = app.add_subcommand("chains", "print the chain words of one degree");
    std::uint32_t cp = 3, cn = 2;
    std::string cfamily = "A";
    chains->add_option("--p", cp, "odd prime characteristic")->capture_default_str();
    chains->add_option("--n", cn, "homological degree")->capture_default_str();
    chains->add_option("--family", cfamily, "A|B|grA|smash")->capture_default_str();

    // export
    auto* exp = app.add_subcommand("export", "write a presentation file");
    std::uint32_t ep = 3;
    std::string ename = "A", epath;
    exp->add_option("--name", ename, "A|B|smash")->required();
    exp->add_option("--p", ep, "odd prime characteristic")->capture_default_str();
    exp->add_option("--out", epath, "output path")->required();

    CLI11_PARSE(app, argc, argv);

    ContextGuard guard;
    if (!guard.ctx) {
        std::cerr << "homcoh: cannot create context\n";
        return 3;
    }

    if (verify->parsed()) {
        if (format != "table" && format != "json") {
            std::cerr << "homcoh: --format must be table or json\n";
            return 2;
        }
        hc_verify_options opts;
        hc_verify_options_init(&opts);
        opts.p = p;
        opts.suite = suite.c_str();
        opts.max_degree = max_degree;
        opts.budget_mb = budget_mb;
        opts.jobs = jobs;
        opts.seed = seed;
        opts.strict = strict ? 1 : 0;
        opts.json = format == "json" ? 1 : 0;
        StringGuard report;
        std::uint32_t failed = 0, skipped = 0;
        hc_status st = hc_verify(guard.ctx, &opts, &report.s, &failed, &skipped);
        if (st != HC_OK) return report_error(guard.ctx, st);
        if (!write_output(out_path, report.s)) {
            std::cerr << "homcoh: cannot write '" << out_path << "'\n";
            return 3;
        }
        if (failed > 0) return 1;
        if (strict && skipped > 0) return 1;
        return 0;
    }

    if (chains->parsed()) {
        StringGuard s;
        hc_status st = hc_chain_set(guard.ctx, cfamily.c_str(), cp, cn, &s.s);
        if (st != HC_OK) return report_error(guard.ctx, st);
        std::cout << "C_" << cn << "(" << cfamily << ", p=" << cp << ") = " << s.s << "\n";
        return 0;
    }

    if (exp->parsed()) {
        hc_status st = hc_export_presentation(guard.ctx, ename.c_str(), ep, epath.c_str());
        if (st != HC_OK) return report_error(guard.ctx, st);
        std::cout << "wrote " << epath << "\n";
        return 0;
    }

    return 2;
}
