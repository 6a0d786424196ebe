/* C interface to the invariant calculus: exact Laurent polynomials in t1, t3,
 * reduction modulo the hexagon relator span, ledger aggregation, and
 * linear-independence certificates. All functions returning w3c_status leave
 * outputs untouched on failure; call w3c_last_error() for a message. Strings
 * and handles returned through out-parameters are owned by the caller and
 * must be released with the matching *_free function. */
#ifndef W3CALC_H
#define W3CALC_H

#include <stddef.h>

#if defined(_WIN32)
#define W3C_API __declspec(dllexport)
#else
#define W3C_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum w3c_status {
    W3C_OK = 0,
    W3C_ERR_ARGUMENT = 1, /* bad parameter, precondition, or schema violation */
    W3C_ERR_PARSE = 2,    /* input is not valid JSON */
    W3C_ERR_MATH = 3      /* a verification suite found a failing check */
} w3c_status;

/* Laurent polynomial in t1, t3 with exact rational coefficients. */
typedef struct w3c_poly w3c_poly;
/* Rank certificate for a list of residues. */
typedef struct w3c_cert w3c_cert;

W3C_API const char* w3c_version(void);
/* Message for the most recent failing call on this thread; never NULL. */
W3C_API const char* w3c_last_error(void);

W3C_API void w3c_poly_free(w3c_poly* p);
W3C_API void w3c_cert_free(w3c_cert* c);
W3C_API void w3c_string_free(char* s);

W3C_API int w3c_poly_is_zero(const w3c_poly* p);
W3C_API int w3c_poly_equal(const w3c_poly* a, const w3c_poly* b);
/* JSON form: [{"exponents":[e1,e3],"coeff":"p/q"}, ...] in graded order. */
W3C_API w3c_status w3c_poly_to_json(const w3c_poly* p, char** out_json);
W3C_API w3c_status w3c_poly_from_json(const char* json, w3c_poly** out);

/* parity is "even" or "odd"; restriction is "none" or "topological". */
W3C_API w3c_status w3c_w3_closed_form(long long k, const char* parity, w3c_poly** out);
W3C_API w3c_status w3c_reduce(const w3c_poly* p, const char* parity,
                              const char* restriction, w3c_poly** out);

/* Bundled crossing ledger for the k-fold family, as schema JSON. */
W3C_API w3c_status w3c_ledger_builtin_json(long long k, char** out_json);
/* Aggregate a schema-JSON ledger; expect_k >= 0 enforces the file's k. */
W3C_API w3c_status w3c_ledger_aggregate(const char* ledger_json, long long expect_k,
                                        const char* parity, w3c_poly** out);
W3C_API w3c_status w3c_assembly_check(long long k, const char* parity, int* out_ok);

/* Certificate over {closed form at k} for k in kmin..kmax (4 <= kmin <= kmax).
 * nthreads <= 0 picks the worker count automatically; results are identical
 * for every worker count. */
W3C_API w3c_status w3c_independence(long long kmin, long long kmax, const char* parity,
                                    const char* restriction, int nthreads, w3c_cert** out);
W3C_API long long w3c_cert_rank(const w3c_cert* c);
W3C_API long long w3c_cert_size(const w3c_cert* c); /* number of labels */
W3C_API int w3c_cert_full_rank(const w3c_cert* c);
W3C_API w3c_status w3c_cert_to_json(const w3c_cert* c, char** out_json);

/* Runs one property suite: "relations", "expansions", "hexagon", "ledger" or
 * "all". Returns W3C_OK with the number of executed checks, or W3C_ERR_MATH
 * with a failure summary in w3c_last_error(). */
W3C_API w3c_status w3c_verify_suite(const char* suite, long long* out_checks);

#ifdef __cplusplus
}
#endif

#endif /* W3CALC_H */
