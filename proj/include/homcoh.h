/* homcoh: cohomology engine for finite dimensional augmented algebras.
 *
 * C interface over the C++ core. All functions that can fail return an
 * hc_status; HC_OK means success. Strings returned through out-parameters
 * are heap allocated and must be released with hc_string_free. A context
 * carries the last error message and caches nothing across calls that would
 * change results; every computation is deterministic for fixed arguments.
 *
 * Families: "A" (the p^2-dimensional quotient with ba = ab + a^2/2 and
 * a^p = b^p = 0), "B" (the same without the power relations), "grA" (the
 * commutative truncated quotient), "smash" (A extended by the order-p
 * automorphism g(a) = a, g(b) = b - a on the generator h = g - 1).
 */

#ifndef HOMCOH_H
#define HOMCOH_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum hc_status {
    HC_OK = 0,
    HC_ERROR_INVALID_ARGUMENT = 1,
    HC_ERROR_BUDGET_EXCEEDED = 2,
    HC_ERROR_IO = 3,
    HC_ERROR_INTERNAL = 4
} hc_status;

typedef struct hc_context hc_context;

const char* hc_version(void);
const char* hc_status_name(hc_status s);

hc_status hc_context_create(hc_context** out_ctx);
void hc_context_destroy(hc_context* ctx);

/* Message for the most recent failing call on this context; empty string
 * when no error has occurred. The pointer stays valid until the next
 * failing call or context destruction. */
const char* hc_last_error(const hc_context* ctx);

typedef struct hc_verify_options {
    uint32_t p;          /* odd prime; default 3 */
    const char* suite;   /* groebner|anick|bar|classes|action|lhs|all */
    uint32_t max_degree; /* resolution depth; default 8 */
    uint32_t budget_mb;  /* memory budget for bar matrices; default 512 */
    uint32_t jobs;       /* worker threads for independent checks; default 1 */
    uint64_t seed;       /* seed for randomized property checks */
    int strict;          /* nonzero: skipped checks count as failures */
    int json;            /* nonzero: JSON report, else aligned table */
} hc_verify_options;

void hc_verify_options_init(hc_verify_options* opts);

/* Runs a verification suite. *report_out receives the rendered report;
 * *failed_out and *skipped_out receive check counts (either may be NULL). */
hc_status hc_verify(hc_context* ctx, const hc_verify_options* opts, char** report_out,
                    uint32_t* failed_out, uint32_t* skipped_out);

/* Chain words of homological degree n, rendered as a set "{...}". */
hc_status hc_chain_set(hc_context* ctx, const char* family, uint32_t p, uint32_t n,
                       char** out);

/* dims_out must hold max_n + 1 entries; dims_out[i] = dim H^i. */
hc_status hc_anick_ext_dims(hc_context* ctx, const char* family, uint32_t p, uint32_t max_n,
                            uint32_t* dims_out);

/* Independent bar-complex dimension of H^n. */
hc_status hc_bar_ext_dim(hc_context* ctx, const char* family, uint32_t p, uint32_t n,
                         uint32_t budget_mb, uint32_t* dim_out);

/* Writes the presentation file for a family ("A", "B" or "smash"). */
hc_status hc_export_presentation(hc_context* ctx, const char* family, uint32_t p,
                                 const char* path);

/* Presentation text without touching the filesystem. */
hc_status hc_presentation_text(hc_context* ctx, const char* family, uint32_t p, char** out);

void hc_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif /* HOMCOH_H */
