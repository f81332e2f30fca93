/* C API for the perfectpoly library: polynomials over GF(2), divisor
 * sums, Mersenne-prime machinery and the bounded perfect-polynomial
 * searches. All state lives behind opaque handles; every fallible
 * function returns a pp_status and sets a thread-local message
 * retrievable with pp_last_error(). Out-parameters are written only on
 * PP_OK. Returned handles are owned by the caller and released with the
 * matching _free function; strings returned through char** are released
 * with pp_string_free.
 */
#ifndef PERFECTPOLY_H
#define PERFECTPOLY_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define PP_API __declspec(dllexport)
#else
#define PP_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum pp_status {
    PP_OK = 0,
    PP_ERR_PARSE = 1,    /* malformed text input */
    PP_ERR_DOMAIN = 2,   /* precondition violated (zero divisor, reducible input, ...) */
    PP_ERR_LIMIT = 3,    /* configured bound exceeded */
    PP_ERR_IO = 4,       /* cache or file problem */
    PP_ERR_INTERNAL = 5
} pp_status;

typedef enum pp_format_style {
    PP_FORMAT_ALGEBRAIC = 0, /* "x^4+x^3+1" */
    PP_FORMAT_HEX = 1,       /* "0x19", bit i = coefficient of x^i */
    PP_FORMAT_PRODUCT = 2    /* "x^2*(x+1)^1*M(1,1)^1" */
} pp_format_style;

typedef enum pp_mode {
    PP_MODE_PERFECT = 0,
    PP_MODE_UNITARY = 1
} pp_mode;

typedef struct pp_poly pp_poly;
typedef struct pp_factorization pp_factorization;
typedef struct pp_rows pp_rows;       /* result set: JSONL + display line per row */
typedef struct pp_session pp_session; /* run options: cache, seed, jobs, resume */

PP_API const char* pp_version(void);

/* Message for the most recent failure on this thread. */
PP_API const char* pp_last_error(void);

PP_API void pp_string_free(char* s);

/* ---- polynomials -------------------------------------------------- */

PP_API pp_status pp_poly_parse(const char* text, pp_poly** out);
PP_API pp_status pp_poly_format(const pp_poly* p, pp_format_style style, char** out);
PP_API pp_poly* pp_poly_clone(const pp_poly* p);
PP_API void pp_poly_free(pp_poly* p);

/* Degree, or -1 for the zero polynomial. */
PP_API int64_t pp_poly_degree(const pp_poly* p);
PP_API int pp_poly_is_zero(const pp_poly* p);
PP_API int pp_poly_equal(const pp_poly* a, const pp_poly* b);

PP_API pp_status pp_poly_add(const pp_poly* a, const pp_poly* b, pp_poly** out);
PP_API pp_status pp_poly_mul(const pp_poly* a, const pp_poly* b, pp_poly** out);
PP_API pp_status pp_poly_divrem(const pp_poly* a, const pp_poly* b, pp_poly** quot, pp_poly** rem);
PP_API pp_status pp_poly_gcd(const pp_poly* a, const pp_poly* b, pp_poly** out);
PP_API pp_status pp_poly_pow(const pp_poly* p, uint64_t e, pp_poly** out);
PP_API pp_status pp_poly_conjugate(const pp_poly* p, pp_poly** out);

/* Coefficient of x^(deg(p)-l); l beyond the degree is a domain error. */
PP_API pp_status pp_poly_alpha(const pp_poly* p, uint64_t l, int* out);
PP_API int pp_poly_is_square(const pp_poly* p);
PP_API pp_status pp_poly_sqrt(const pp_poly* p, pp_poly** out);

/* *out_splits = 1 and fills (u, v) when p = x^u (x+1)^v. */
PP_API pp_status pp_poly_splits(const pp_poly* p, int* out_splits, uint64_t* u, uint64_t* v);

/* ---- factorization ------------------------------------------------ */

PP_API pp_status pp_factorize(pp_session* session, const pp_poly* p, pp_factorization** out);
PP_API pp_status pp_squarefree_decompose(const pp_poly* p, pp_factorization** out);
PP_API size_t pp_factorization_size(const pp_factorization* f);
/* Borrowed reference, valid while f lives. */
PP_API const pp_poly* pp_factorization_prime(const pp_factorization* f, size_t i);
PP_API uint32_t pp_factorization_multiplicity(const pp_factorization* f, size_t i);
PP_API void pp_factorization_free(pp_factorization* f);

/* Canonical one-line JSON for a factorization result. */
PP_API pp_status pp_factorization_jsonl(const pp_poly* p, const pp_factorization* f, char** out);

PP_API pp_status pp_poly_is_irreducible(const pp_poly* p, int* out);
PP_API pp_status pp_poly_order(const pp_poly* p, uint64_t* out);
PP_API pp_status pp_poly_is_primitive(const pp_poly* p, int* out);

/* ---- divisor sums and perfectness --------------------------------- */

PP_API pp_status pp_sigma(const pp_poly* a, pp_poly** out);
PP_API pp_status pp_sigma_star(const pp_poly* a, pp_poly** out);
PP_API pp_status pp_is_perfect(const pp_poly* a, int* out);
PP_API pp_status pp_is_unitary_perfect(const pp_poly* a, int* out);
PP_API pp_status pp_is_special_perfect(const pp_poly* a, int* out);
PP_API pp_status pp_is_indecomposable(const pp_poly* a, pp_mode mode, int* out);

typedef struct pp_perfect_class {
    /* one of: "not-perfect", "trivial-perfect", "paper-T",
     * "unitary-paper-U", "other-perfect", "other-unitary-perfect" */
    const char* kind;
    uint32_t index; /* T 1..11, U base 1..9, trivial n; 0 otherwise */
    uint32_t power; /* n in U_j^(2^n); 0 otherwise */
    int conjugated; /* matched as the conjugate of the listed entry */
} pp_perfect_class;

PP_API pp_status pp_classify_perfect(const pp_poly* a, pp_mode mode, pp_perfect_class* out);

/* sigma(sigma(M^(2h))) for M = 1 + x^a (x+1)^b, which must be irreducible. */
PP_API pp_status pp_u_iterate(uint64_t a, uint64_t b, uint64_t h, pp_poly** out);

/* ---- Mersenne primes ---------------------------------------------- */

PP_API pp_status pp_mersenne_poly(uint64_t a, uint64_t b, pp_poly** out);
/* *out = 1 plus (a, b) when p is irreducible with p+1 = x^a (x+1)^b. */
PP_API pp_status pp_is_mersenne_prime(const pp_poly* p, int* out, uint64_t* a, uint64_t* b);
/* N2(m), exact for 1 <= m <= 64. */
PP_API pp_status pp_count_irreducibles(uint64_t m, uint64_t* out);
/* One row per Mersenne pair with degree <= max_degree. */
PP_API pp_status pp_mersenne_list(uint64_t max_degree, pp_rows** out);

/* ---- integer side -------------------------------------------------- */

PP_API pp_status pp_ord2(uint64_t p, uint64_t* out);

typedef struct pp_prime_profile {
    uint64_t p;
    uint64_t ord2;
    int is_mersenne_number; /* p = 2^m - 1 */
    int is_fermat_prime;    /* p = 2^(2^w) + 1 */
} pp_prime_profile;

PP_API pp_status pp_classify_prime(uint64_t p, pp_prime_profile* out);

/* ---- sessions ------------------------------------------------------ */

PP_API pp_session* pp_session_new(void);
PP_API void pp_session_free(pp_session* s);
/* Attach an on-disk factorization cache (created if absent). */
PP_API pp_status pp_session_set_cache(pp_session* s, const char* path);
PP_API void pp_session_set_seed(pp_session* s, uint64_t seed);
PP_API void pp_session_set_jobs(pp_session* s, uint32_t jobs);
/* Resume: number of leading partitions to skip in searches and scans. */
PP_API void pp_session_set_skip_partitions(pp_session* s, uint32_t n);
/* Warnings collected so far (cache corruption etc.), oldest first. */
PP_API size_t pp_session_warning_count(const pp_session* s);
PP_API const char* pp_session_warning(const pp_session* s, size_t i);

/* ---- searches, scan, verification ---------------------------------- */

/* session may be NULL for defaults (single job, default seed, no cache). */
PP_API pp_status pp_search_perfect(pp_session* session, uint32_t max_degree, pp_mode mode,
                                   pp_rows** out);
PP_API pp_status pp_search_special(pp_session* session, uint32_t max_degree, pp_rows** out);
PP_API pp_status pp_conjecture_scan(pp_session* session, uint32_t max_m_degree, uint32_t max_h,
                                    pp_rows** out);

/* Streaming variant: rows arrive in deterministic order; return 0 from
 * the callback to keep going, nonzero to stop early. */
typedef int (*pp_row_callback)(void* user, uint32_t partition, const char* jsonl,
                               const char* display);
PP_API pp_status pp_conjecture_scan_stream(pp_session* session, uint32_t max_m_degree,
                                           uint32_t max_h, pp_row_callback cb, void* user);

/* Replays the published identities; one row per check, ordered by
 * check_id. n_fail/n_discrepancy may be NULL. */
PP_API pp_status pp_verify_paper(pp_session* session, pp_rows** out, int* n_fail,
                                 int* n_discrepancy);

PP_API size_t pp_rows_size(const pp_rows* rows);
/* Borrowed strings, valid while rows lives. */
PP_API const char* pp_rows_jsonl(const pp_rows* rows, size_t i);
PP_API const char* pp_rows_display(const pp_rows* rows, size_t i);
PP_API uint32_t pp_rows_partition(const pp_rows* rows, size_t i);
PP_API void pp_rows_free(pp_rows* rows);

#ifdef __cplusplus
}
#endif

#endif /* PERFECTPOLY_H */
