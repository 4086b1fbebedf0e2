/* cfmod — modular multiplication and division through continued-fraction
 * numeration systems.
 *
 * C interface of the shared library. Integers cross the boundary as
 * decimal or 0x-prefixed hexadecimal strings of any size; results come
 * back as malloc'd decimal strings that the caller releases with
 * cfmod_string_free(). Every function returns CFMOD_OK or an error code;
 * cfmod_last_error() gives a thread-local human-readable detail for the
 * most recent failure on the calling thread (for CFMOD_ERR_NOT_INVERTIBLE
 * it names the offending gcd).
 *
 * A cfmod_ctx holds the expansion of a/d and the evaluation bases for
 * repeated multiplications/divisions by the same a. Contexts are
 * immutable once created and may be shared across threads; destroy them
 * with cfmod_ctx_free().
 */

#ifndef CFMOD_H
#define CFMOD_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct cfmod_ctx cfmod_ctx;

typedef enum cfmod_status {
    CFMOD_OK = 0,
    CFMOD_ERR_ZERO_MODULUS = 1,   /* d == 0 */
    CFMOD_ERR_NOT_INVERTIBLE = 2, /* gcd(a, d) > 1 where 1 is required */
    CFMOD_ERR_RANGE = 3,          /* operand outside the documented domain */
    CFMOD_ERR_INDEX = 4,          /* sequence index out of range */
    CFMOD_ERR_MISMATCH = 5,       /* digit string bound to another context */
    CFMOD_ERR_PARSE = 6,          /* malformed number or digit text */
    CFMOD_ERR_IO = 7,             /* file could not be written */
    CFMOD_ERR_INVALID_ARG = 8     /* null pointer or bad enum value */
} cfmod_status;

typedef enum cfmod_scale {
    CFMOD_SCALE_Q = 0,    /* value = 1 + sum b_i q_{i-1} */
    CFMOD_SCALE_THETA = 1 /* value = sum b_i theta'_{i-1} */
} cfmod_scale;

typedef enum cfmod_div_method {
    CFMOD_DIV_THEOREM2 = 0, /* theta-scale digits against alternating q */
    CFMOD_DIV_ITO_T2 = 1    /* ceiling-based digits against q (experimental) */
} cfmod_div_method;

const char* cfmod_version(void);

/* Static description of a status code. */
const char* cfmod_status_message(cfmod_status status);

/* Thread-local detail for the last failed call on this thread. */
const char* cfmod_last_error(void);

void cfmod_string_free(char* s);

/* ----- expansion contexts ------------------------------------------- */

/* Expands a/d (a reduced modulo d first). Requires d >= 1, a >= 0. */
cfmod_status cfmod_ctx_new(const char* a, const char* d, cfmod_ctx** out);
void cfmod_ctx_free(cfmod_ctx* ctx);

/* Number of partial quotients n; 0 only for the degenerate a = 0 case. */
cfmod_status cfmod_ctx_length(const cfmod_ctx* ctx, int* out);
cfmod_status cfmod_ctx_gcd(const cfmod_ctx* ctx, char** out);

/* k_i for 1 <= i <= n. */
cfmod_status cfmod_ctx_quotient(const cfmod_ctx* ctx, int i, char** out);
/* Convergent p_i / q_i for -1 <= i <= n; either output may be NULL. */
cfmod_status cfmod_ctx_convergent(const cfmod_ctx* ctx, int i, char** p_out,
                                  char** q_out);
/* Euclidean remainder theta'_i for -1 <= i <= n. */
cfmod_status cfmod_ctx_remainder(const cfmod_ctx* ctx, int i, char** out);
/* Signed remainder eta'_i = (-1)^i theta'_i for -1 <= i <= n. */
cfmod_status cfmod_ctx_signed_remainder(const cfmod_ctx* ctx, int i, char** out);
/* Exact tail theta'_i / theta'_{i-1} in lowest terms, 0 <= i <= n. */
cfmod_status cfmod_ctx_tail(const cfmod_ctx* ctx, int i, char** num_out,
                            char** den_out);

/* ----- modular operations ------------------------------------------- */

/* (a*b) mod d via the basis change; b may be any non-negative integer. */
cfmod_status cfmod_modmul(const char* a, const char* b, const char* d, char** out);

/* (a*b) mod d by multiply-then-reduce; the baseline. */
cfmod_status cfmod_naive_modmul(const char* a, const char* b, const char* d,
                                char** out);

/* (a^-1 * b) mod d for 0 <= b < d, gcd(a, d) = 1. If correction_out is
 * non-NULL it reports whether the route's final adjustment fired (+d for
 * THEOREM2, a defensive reduction for ITO_T2). */
cfmod_status cfmod_moddiv(const char* a, const char* b, const char* d,
                          cfmod_div_method method, int* correction_out,
                          char** out);

/* a^-1 mod d. */
cfmod_status cfmod_modinv(const char* a, const char* d, char** out);

/* Context-bound variants; same contracts, no re-expansion. */
cfmod_status cfmod_ctx_modmul(const cfmod_ctx* ctx, const char* b, char** out);
cfmod_status cfmod_ctx_moddiv(const cfmod_ctx* ctx, const char* b, char** out);

/* ----- numeration --------------------------------------------------- */

/* Writes value in the requested scale of ctx. Digit strings render
 * least-significant-first as "b1,b2,...,bn+1". Q scale needs value >= 1;
 * THETA needs 0 <= value < d and gcd(a, d) = 1. */
cfmod_status cfmod_encode(const cfmod_ctx* ctx, const char* value,
                          cfmod_scale scale, char** digits_out);

/* Evaluates a "b1,...,bn+1" digit string in the requested scale. */
cfmod_status cfmod_decode(const cfmod_ctx* ctx, const char* digits,
                          cfmod_scale scale, char** out);

/* Checks the scale's Markovian digit conditions; *out becomes 0 or 1. */
cfmod_status cfmod_digits_valid(const cfmod_ctx* ctx, const char* digits,
                                cfmod_scale scale, int* out);

/* ----- statistics ---------------------------------------------------- */

/* P(k_i = k) = -log2(1 - 1/(k+1)^2), k >= 1. */
cfmod_status cfmod_gauss_kuzmin_pmf(unsigned long k, double* out);

/* Limit law of the overflow digit: P(b_{n+1} <= k), k >= 0. */
cfmod_status cfmod_bn1_cdf(unsigned long k, double* out);

/* Writes the closed-form table "k cdf(k)" for k = 0..kmax to a file. */
cfmod_status cfmod_write_bn1_table(unsigned kmax, const char* path);

/* Monte Carlo overflow-digit CDF for a, d uniform in [1, N] (N given as
 * a decimal/hex string), b uniform in [1, d]. Fills cdf_out[0..kmax].
 * Deterministic for fixed (seed, workers). */
cfmod_status cfmod_empirical_bn1(const char* n_limit, unsigned long long samples,
                                 unsigned long long seed, unsigned kmax,
                                 unsigned workers, double* cdf_out);

/* Expands `samples` random rationals with a `bits`-bit modulus and
 * tallies all partial quotients. pmf_out (may be NULL) receives kmax
 * entries for k = 1..kmax; geometric_mean_out (may be NULL) receives the
 * Khinchin statistic; csv_path (may be NULL) receives the histogram as
 * "k,count,frequency" rows. */
cfmod_status cfmod_quotient_stats(unsigned bits, unsigned long long samples,
                                  unsigned long long seed, unsigned kmax,
                                  unsigned workers, const char* csv_path,
                                  double* pmf_out, double* geometric_mean_out);

/* ----- benchmark harness --------------------------------------------- */

/* Times the CF-based operations against the naive baseline on seeded
 * random inputs, one row per (operation, bit size). When `subtractive`
 * is nonzero every quotient is computed by repeated subtraction (with a
 * division fallback); results and checksums are unchanged. csv_path (may
 * be NULL) receives "op,bits,reps,total_ns,ns_per_op,checksum" rows;
 * table_out (may be NULL) receives a human-readable table. */
cfmod_status cfmod_bench(const unsigned* bits, size_t bits_count,
                         unsigned long long reps, unsigned long long seed,
                         int subtractive, const char* csv_path, char** table_out);

#ifdef __cplusplus
}
#endif

#endif /* CFMOD_H */
