/* seqid — exact Pell / Pell-Lucas sequence and polynomial-identity toolkit.
 *
 * C interface to the shared library. All functions returning seqid_status
 * use SEQID_OK for success; on failure seqid_last_error() carries a
 * human-readable detail for the calling thread. Strings handed out through
 * char** parameters are heap-allocated and must be released with
 * seqid_string_free(). Handles are opaque and released with their _free
 * function. NULL output pointers are rejected, never dereferenced.
 *
 * Every operation is a pure computation over its arguments; the library
 * keeps no global state beyond the per-thread error message, so all entry
 * points may be called concurrently.
 */
#ifndef SEQID_H
#define SEQID_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define SEQID_API __declspec(dllexport)
#else
#define SEQID_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum seqid_status {
    SEQID_OK = 0,
    SEQID_ERROR_INVALID_ARGUMENT = 1,
    SEQID_ERROR_INTERNAL = 2
} seqid_status;

/* Static name for a status code ("ok", "invalid argument", ...). */
SEQID_API const char* seqid_status_name(seqid_status status);

/* Detail message for the most recent failure on this thread; empty string
 * if the last call succeeded. */
SEQID_API const char* seqid_last_error(void);

SEQID_API void seqid_string_free(char* s);

/* ---- sequence terms ----------------------------------------------------
 *
 * The sequence family is a_{n+2} = s*a_{n+1} + a_n, a_0 = 0, a_1 = 1
 * (s = 2: Pell, s = 1: Fibonacci). The companion sequence is
 * b_n = a_{n-1} + a_{n+1} with b_0 = 2 (s = 2: Pell-Lucas).
 *
 * method: "fast" (doubling, O(log n) multiplications), "naive" (linear
 * iteration), or "matrix" (binary power of [[0,1],[1,s]]; requires n >= 1).
 * NULL means "fast". Results are written as decimal strings.
 */
SEQID_API seqid_status seqid_term(long s, long n, const char* method, char** out);
SEQID_API seqid_status seqid_companion(long s, long n, const char* method, char** out);

/* Digest of a term for cross-method comparison: number of decimal digits
 * and the value's low 64 bits. */
SEQID_API seqid_status seqid_term_digest(long s, long n, const char* method,
                                         size_t* digit_count, uint64_t* low64);

/* ---- identity families --------------------------------------------------
 *
 * family: "odd-multiple"     P_{(2m+1)n} as an odd polynomial in P_n
 *                            (general=1 switches to the s-parameterized
 *                            family in A_n with (s^2+4)-power coefficients)
 *         "power-reduction"  P_n^{2m+1} as a scaled sum of P_{(2m+1-2j)n}
 *         "melham"           Q_1 Q_3 ... Q_{2m+1} * sum_{k<=n} P_{2k}^{2m+1}
 *                            as a polynomial in P_{2n+1}
 *
 * render: format is "plain", "latex", or "json"; parity ("even"/"odd",
 * NULL = "odd") resolves sign alternation where the family depends on
 * n mod 2; cleared selects the integer-cleared melham form.
 */
typedef struct seqid_identity seqid_identity;

SEQID_API seqid_status seqid_identity_create(const char* family, long m, int general,
                                             seqid_identity** out);
SEQID_API seqid_status seqid_identity_render(const seqid_identity* identity, const char* format,
                                             const char* parity, int cleared, char** out);
SEQID_API void seqid_identity_free(seqid_identity* identity);

/* ---- verification -------------------------------------------------------
 *
 * suite: "all", "sequences", "odd-multiple", "melham", "power-reduction",
 * "partial-sum", or "general". Bounds m_max / n_max / s_max < 0 select the
 * suite defaults. The report collects exact brute-force comparisons;
 * format "plain" or "json".
 */
typedef struct seqid_report seqid_report;

SEQID_API seqid_status seqid_verify(const char* suite, long m_max, long n_max, long s_max,
                                    seqid_report** out);
SEQID_API int seqid_report_passed(const seqid_report* report); /* 1 = every check passed */
SEQID_API seqid_status seqid_report_render(const seqid_report* report, const char* format,
                                           char** out);
SEQID_API void seqid_report_free(seqid_report* report);

#ifdef __cplusplus
}
#endif

#endif /* SEQID_H */
