#include "homcoh.h"

#include <cstdlib>
#include <cstring>
#include <fstream>
#include <mutex>
#include <new>
#include <string>

#include "suites.hpp"

struct hc_context {
    std::mutex mu;
    std::string last_error;
};

namespace {

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (!out) return nullptr;
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

void set_error(hc_context* ctx, const std::string& msg) {
    if (!ctx) return;
    std::lock_guard lk(ctx->mu);
    ctx->last_error = msg;
}

template <class F>
hc_status wrap(hc_context* ctx, F&& body) {
    if (!ctx) return HC_ERROR_INVALID_ARGUMENT;
    try {
        body();
        set_error(ctx, "");
        return HC_OK;
    } catch (const homcoh::BudgetError& e) {
        set_error(ctx, e.what());
        return HC_ERROR_BUDGET_EXCEEDED;
    } catch (const std::invalid_argument& e) {
        set_error(ctx, e.what());
        return HC_ERROR_INVALID_ARGUMENT;
    } catch (const std::ios_base::failure& e) {
        set_error(ctx, e.what());
        return HC_ERROR_IO;
    } catch (const std::exception& e) {
        set_error(ctx, e.what());
        return HC_ERROR_INTERNAL;
    }
}

}  // namespace

extern "C" {

const char* hc_version(void) { return homcoh::suites::kVersion; }

const char* hc_status_name(hc_status s) {
    switch (s) {
        case HC_OK: return "ok";
        case HC_ERROR_INVALID_ARGUMENT: return "invalid argument";
        case HC_ERROR_BUDGET_EXCEEDED: return "budget exceeded";
        case HC_ERROR_IO: return "i/o error";
        default: return "internal error";
    }
}

hc_status hc_context_create(hc_context** out_ctx) {
    if (!out_ctx) return HC_ERROR_INVALID_ARGUMENT;
    *out_ctx = new (std::nothrow) hc_context();
    return *out_ctx ? HC_OK : HC_ERROR_INTERNAL;
}

void hc_context_destroy(hc_context* ctx) { delete ctx; }

const char* hc_last_error(const hc_context* ctx) {
    if (!ctx) return "";
    return ctx->last_error.c_str();
}

void hc_verify_options_init(hc_verify_options* opts) {
    if (!opts) return;
    opts->p = 3;
    opts->suite = "all";
    opts->max_degree = 8;
    opts->budget_mb = 512;
    opts->jobs = 1;
    opts->seed = 1729;
    opts->strict = 0;
    opts->json = 0;
}

hc_status hc_verify(hc_context* ctx, const hc_verify_options* opts, char** report_out,
                    uint32_t* failed_out, uint32_t* skipped_out) {
    if (!opts || !report_out) {
        set_error(ctx, "hc_verify: null argument");
        return HC_ERROR_INVALID_ARGUMENT;
    }
    return wrap(ctx, [&]() {
        homcoh::suites::Options o;
        o.p = opts->p;
        o.suite = opts->suite ? opts->suite : "all";
        o.max_degree = opts->max_degree;
        o.budget_mb = opts->budget_mb;
        o.jobs = opts->jobs ? opts->jobs : 1;
        o.seed = opts->seed;
        o.strict = opts->strict != 0;
        auto rep = homcoh::suites::run(o);
        std::string text = opts->json ? rep.to_json() : rep.to_table();
        *report_out = dup_string(text);
        if (!*report_out) throw std::runtime_error("out of memory");
        if (failed_out) *failed_out = static_cast<uint32_t>(rep.count(homcoh::report::Status::fail));
        if (skipped_out)
            *skipped_out = static_cast<uint32_t>(rep.count(homcoh::report::Status::skipped));
    });
}

hc_status hc_chain_set(hc_context* ctx, const char* family, uint32_t p, uint32_t n, char** out) {
    if (!family || !out) {
        set_error(ctx, "hc_chain_set: null argument");
        return HC_ERROR_INVALID_ARGUMENT;
    }
    return wrap(ctx, [&]() {
        std::string s = homcoh::suites::chain_set_rendered(family, p, n);
        *out = dup_string(s);
        if (!*out) throw std::runtime_error("out of memory");
    });
}

hc_status hc_anick_ext_dims(hc_context* ctx, const char* family, uint32_t p, uint32_t max_n,
                            uint32_t* dims_out) {
    if (!family || !dims_out) {
        set_error(ctx, "hc_anick_ext_dims: null argument");
        return HC_ERROR_INVALID_ARGUMENT;
    }
    return wrap(ctx, [&]() {
        auto dims = homcoh::suites::anick_ext_dims(family, p, max_n);
        for (uint32_t i = 0; i <= max_n; ++i) dims_out[i] = dims[i];
    });
}

hc_status hc_bar_ext_dim(hc_context* ctx, const char* family, uint32_t p, uint32_t n,
                         uint32_t budget_mb, uint32_t* dim_out) {
    if (!family || !dim_out) {
        set_error(ctx, "hc_bar_ext_dim: null argument");
        return HC_ERROR_INVALID_ARGUMENT;
    }
    return wrap(ctx, [&]() { *dim_out = homcoh::suites::bar_ext_dim(family, p, n, budget_mb); });
}

hc_status hc_presentation_text(hc_context* ctx, const char* family, uint32_t p, char** out) {
    if (!family || !out) {
        set_error(ctx, "hc_presentation_text: null argument");
        return HC_ERROR_INVALID_ARGUMENT;
    }
    return wrap(ctx, [&]() {
        std::string s = homcoh::suites::export_presentation(family, p);
        *out = dup_string(s);
        if (!*out) throw std::runtime_error("out of memory");
    });
}

hc_status hc_export_presentation(hc_context* ctx, const char* family, uint32_t p,
                                 const char* path) {
    if (!family || !path) {
        set_error(ctx, "hc_export_presentation: null argument");
        return HC_ERROR_INVALID_ARGUMENT;
    }
    return wrap(ctx, [&]() {
        std::string s = homcoh::suites::export_presentation(family, p);
        std::ofstream f(path, std::ios::binary);
        if (!f) throw std::ios_base::failure("cannot open '" + std::string(path) + "' for writing");
        f << s;
        f.close();
        if (!f) throw std::ios_base::failure("write to '" + std::string(path) + "' failed");
    });
}

void hc_string_free(char* s) { std::free(s); }

}  // extern "C"
