/* gcfuller.h — C interface of the gcfuller shared library.
 *
 * Goldberg-Coxeter transformations on fullerene dimension data: exact
 * Eisenstein-integer arithmetic, transform application / inversion /
 * composition, candidate enumeration from area scale factors, and full
 * identification of the sub-transformation chain and ultimate archetype.
 *
 * Conventions:
 *   - An Eisenstein integer a + b*w (w = exp(i*pi/3)) is passed as the pair
 *     (a, b); a transformation (k, l) is the pair (k, l) with k >= 1, l >= 0.
 *   - Every fallible call returns a gcf_status; results go to out-pointers.
 *   - Arithmetic is exact: results that do not fit int64/uint64 outputs
 *     yield GCF_ERROR_OVERFLOW instead of wrapping.
 *   - Objects behind opaque handles (gcf_dims, gcf_report) are immutable
 *     once created and must be released with their _free function.
 *   - char** outputs are heap strings; release them with gcf_string_free.
 */

#ifndef GCFULLER_H
#define GCFULLER_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define GCF_API __declspec(dllexport)
#else
#define GCF_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum gcf_status {
    GCF_OK = 0,
    GCF_ERROR_ARGUMENT = 1,       /* null pointer or malformed argument */
    GCF_ERROR_DOMAIN = 2,         /* input outside the operation's domain */
    GCF_ERROR_NOT_DIVISIBLE = 3,  /* inversion/division has no lattice solution */
    GCF_ERROR_OVERFLOW = 4,       /* exact result does not fit the output type */
    GCF_ERROR_PARSE = 5,          /* dimension file rejected */
    GCF_ERROR_CAPACITY = 6,       /* caller buffer too small; *count holds the need */
    GCF_ERROR_RANGE = 7           /* index out of range */
} gcf_status;

GCF_API const char *gcf_status_name(gcf_status status);
GCF_API const char *gcf_version(void);

/* ---- Eisenstein integer arithmetic -------------------------------------- */

GCF_API gcf_status gcf_add(int64_t a1, int64_t b1, int64_t a2, int64_t b2,
                           int64_t *ra, int64_t *rb);
GCF_API gcf_status gcf_mul(int64_t a1, int64_t b1, int64_t a2, int64_t b2,
                           int64_t *ra, int64_t *rb);
GCF_API gcf_status gcf_conj(int64_t a, int64_t b, int64_t *ra, int64_t *rb);
/* norm(a, b) = a^2 + ab + b^2 */
GCF_API gcf_status gcf_norm(int64_t a, int64_t b, uint64_t *n);
/* Unique associate (a, b) * w^m with a > 0, b >= 0; m in 0..5. */
GCF_API gcf_status gcf_canonical_sextant(int64_t a, int64_t b,
                                         int64_t *ca, int64_t *cb,
                                         int32_t *unit_power);
/* Quotient q with q*(da, db) == (a, b), or GCF_ERROR_NOT_DIVISIBLE. */
GCF_API gcf_status gcf_exact_div(int64_t a, int64_t b, int64_t da, int64_t db,
                                 int64_t *qa, int64_t *qb);
/* Prime factorization over the Eisenstein lattice. Writes (a, b, exponent)
 * triples of canonical-sextant primes and the residual unit power of w.
 * With insufficient capacity returns GCF_ERROR_CAPACITY and sets *count. */
GCF_API gcf_status gcf_factorize(int64_t a, int64_t b, int32_t *unit_power,
                                 int64_t *triples, size_t capacity,
                                 size_t *count);

/* ---- Goldberg-Coxeter transformations ----------------------------------- */

typedef enum gcf_transform_kind {
    GCF_TRANSFORM_IDENTITY = 0,
    GCF_TRANSFORM_INFLATION = 1,
    GCF_TRANSFORM_LEAPFROG = 2,
    GCF_TRANSFORM_PRIMARY = 3,
    GCF_TRANSFORM_COMPOSITE = 4
} gcf_transform_kind;

/* (a', b') = (k*a - l*b, l*a + (k+l)*b): the transformed edge coordinates. */
GCF_API gcf_status gcf_transform_apply(int64_t k, int64_t l, int64_t a,
                                       int64_t b, int64_t *ra, int64_t *rb);
/* Solves apply for the original edge; GCF_ERROR_NOT_DIVISIBLE when the edge
 * is not an image under (k, l). The result may lie outside the first
 * sextant; canonicalize with gcf_canonical_sextant if needed. */
GCF_API gcf_status gcf_transform_invert(int64_t k, int64_t l, int64_t a,
                                        int64_t b, int64_t *ra, int64_t *rb);
/* Canonical form of the product transform; norm multiplies. */
GCF_API gcf_status gcf_transform_compose(int64_t k1, int64_t l1, int64_t k2,
                                         int64_t l2, int64_t *k, int64_t *l);
GCF_API gcf_status gcf_transform_classify(int64_t k, int64_t l,
                                          gcf_transform_kind *kind,
                                          uint64_t *inflation_factor);
/* Basic factors (prime inflations and prime-norm transforms) as (k, l)
 * pairs, sorted by (norm, k, l); composing them reproduces (k, l). */
GCF_API gcf_status gcf_transform_decompose(int64_t k, int64_t l,
                                           int64_t *pairs, size_t capacity,
                                           size_t *count);
/* All (k, l) with k >= 1, l >= 0 and k^2 + kl + l^2 == n, ascending k. */
GCF_API gcf_status gcf_transform_candidates(uint64_t n, int64_t *pairs,
                                            size_t capacity, size_t *count);
/* Brute-force decomposability test; independent of gcf_factorize. */
GCF_API gcf_status gcf_oracle_decomposable(int64_t k, int64_t l,
                                           int32_t *decomposable);

/* ---- Fullerene dimension sets ------------------------------------------- */

typedef struct gcf_dims gcf_dims;

/* edges: edge_count (a, b) pairs, flattened; facets: facet_count
 * (k, l, p, q) quadruples, flattened; facets/name may be NULL. */
GCF_API gcf_status gcf_dims_create(const int64_t *edges, size_t edge_count,
                                   const int64_t *facets, size_t facet_count,
                                   const char *name, gcf_dims **out);
/* Parses a dims JSON document. On failure writes a diagnostic into errbuf
 * (if given) and returns GCF_ERROR_PARSE. */
GCF_API gcf_status gcf_dims_parse(const char *json_text, gcf_dims **out,
                                  char *errbuf, size_t errbuf_size);
GCF_API void gcf_dims_free(gcf_dims *dims);
GCF_API gcf_status gcf_dims_to_json(const gcf_dims *dims, int pretty,
                                    char **out);

GCF_API size_t gcf_dims_edge_count(const gcf_dims *dims);
GCF_API size_t gcf_dims_facet_count(const gcf_dims *dims);
GCF_API gcf_status gcf_dims_edge(const gcf_dims *dims, size_t index,
                                 int64_t *a, int64_t *b);
GCF_API gcf_status gcf_dims_facet(const gcf_dims *dims, size_t index,
                                  int64_t *k, int64_t *l, int64_t *p,
                                  int64_t *q);
/* Borrowed pointer, valid while dims lives; NULL when unnamed. */
GCF_API const char *gcf_dims_name(const gcf_dims *dims);

GCF_API gcf_status gcf_dims_edge_square(const gcf_dims *dims, size_t index,
                                        uint64_t *square);
GCF_API gcf_status gcf_dims_facet_area(const gcf_dims *dims, size_t index,
                                       uint64_t *area);
/* gcd of all edge coordinates; a value > 1 certifies an inflation. */
GCF_API gcf_status gcf_dims_detect_inflation(const gcf_dims *dims,
                                             uint64_t *factor);
/* 1 iff every edge satisfies a == b (mod 3). */
GCF_API gcf_status gcf_dims_leapfrog_test(const gcf_dims *dims,
                                          int32_t *is_leapfrog);
/* gcd of all edge squares and facet areas. */
GCF_API gcf_status gcf_dims_area_scale_factor(const gcf_dims *dims,
                                              uint64_t *factor);
/* Divides every coordinate by factor (>= 2); GCF_ERROR_DOMAIN when some
 * coordinate is not divisible. */
GCF_API gcf_status gcf_dims_deflate(const gcf_dims *dims, uint64_t factor,
                                    gcf_dims **out);
/* Applies (k, l) to every edge and facet pair, canonicalized back to
 * Coxeter (first-sextant) coordinates. */
GCF_API gcf_status gcf_dims_transform(const gcf_dims *dims, int64_t k,
                                      int64_t l, gcf_dims **out);

/* ---- Identification ------------------------------------------------------ */

typedef struct gcf_report gcf_report;

GCF_API gcf_status gcf_identify(const gcf_dims *dims, gcf_report **out);
GCF_API void gcf_report_free(gcf_report *report);

GCF_API uint64_t gcf_report_inflation_factor(const gcf_report *report);
GCF_API uint64_t gcf_report_area_scale_factor(const gcf_report *report);
GCF_API uint64_t gcf_report_norm_product(const gcf_report *report);
GCF_API size_t gcf_report_chain_length(const gcf_report *report);
GCF_API gcf_status gcf_report_chain_step(const gcf_report *report,
                                         size_t index, int64_t *k,
                                         int64_t *l);
GCF_API gcf_status gcf_report_archetype(const gcf_report *report,
                                        gcf_dims **out);
GCF_API size_t gcf_report_residual_count(const gcf_report *report);
GCF_API gcf_status gcf_report_residual_prime(const gcf_report *report,
                                             size_t index, uint64_t *prime);
GCF_API size_t gcf_report_note_count(const gcf_report *report);
/* Borrowed pointer, valid while the report lives. */
GCF_API const char *gcf_report_note(const gcf_report *report, size_t index);
GCF_API size_t gcf_report_alternate_count(const gcf_report *report);
GCF_API gcf_status gcf_report_alternate(const gcf_report *report,
                                        size_t index, int64_t *k, int64_t *l);
GCF_API gcf_status gcf_report_to_json(const gcf_report *report, int pretty,
                                      char **out);

/* ---- Conjecture checks --------------------------------------------------- */

/* which = 1: every transform that is primary by the brute-force oracle has
 * prime norm. which = 2: every inflation-free transform decomposes into
 * exactly one prime-norm factor per prime factor of its norm, counted with
 * multiplicity. bound >= 3. detail_json (optional) receives the full
 * machine-readable report. */
GCF_API gcf_status gcf_check_conjecture(int32_t which, uint64_t bound,
                                        uint64_t *checked,
                                        uint64_t *counterexamples,
                                        char **detail_json);

GCF_API void gcf_string_free(char *text);

#ifdef __cplusplus
}
#endif

#endif /* GCFULLER_H */
