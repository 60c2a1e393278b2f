/* daa — exact construction and spectral analysis of doubly-affine integer
 * arrays (magic squares, Latin squares, and their higher-dimensional
 * analogues) built by weighted Kronecker-product compounding.
 *
 * The library is exposed through opaque handles and integer status codes so
 * it can be consumed from C, or from any language with a C FFI. Handles are
 * created by daa_* constructors and released with the matching *_free call;
 * strings returned through char** are heap-allocated and released with
 * daa_string_free. On failure every function returns a daa_status other than
 * DAA_OK and leaves a human-readable explanation in daa_last_error()
 * (thread-local). Output parameters are untouched on failure.
 */

#ifndef DAA_H
#define DAA_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define DAA_API __declspec(dllexport)
#else
#define DAA_API __attribute__((visibility("default")))
#endif

typedef enum daa_status {
  DAA_OK = 0,
  DAA_ERR_INVALID_ARGUMENT = 1, /* bad shape, size, or parameter */
  DAA_ERR_PRECONDITION = 2,     /* mathematical precondition not met */
  DAA_ERR_OVERFLOW = 3,         /* a 64-bit element computation overflowed */
  DAA_ERR_PARSE = 4,            /* malformed document */
  DAA_ERR_UNKNOWN_NAME = 5,     /* no fixture with that name */
  DAA_ERR_BUFFER_TOO_SMALL = 6,
  DAA_ERR_NO_MEMORY = 7,
  DAA_ERR_INTERNAL = 8
} daa_status;

/* The compounding constructions. Aggregated keeps consecutive integers
 * grouped inside blocks, dispersed spreads them across blocks, the reverse
 * forms swap the Kronecker factor order (perfect shuffles of the forward
 * forms), and gapda compounds gap-sequence seeds without scale factors. */
typedef enum daa_variant {
  DAA_VARIANT_AGGREGATED = 0,
  DAA_VARIANT_DISPERSED = 1,
  DAA_VARIANT_REV_AGGREGATED = 2,
  DAA_VARIANT_REV_DISPERSED = 3,
  DAA_VARIANT_GAPDA = 4
} daa_variant;

typedef enum daa_property {
  DAA_PROP_FULL_COVER = 0, /* elements are exactly 0..n^k-1, equal multiplicity */
  DAA_PROP_SEMI_MAGIC = 1, /* all axis-parallel lines share one sum */
  DAA_PROP_MAGIC = 2,      /* semi-magic plus all main space diagonals */
  DAA_PROP_LATIN = 3,      /* every line is a permutation of 0..n-1 */
  DAA_PROP_DIAGONAL_LATIN = 4,
  DAA_PROP_PANDIAGONAL = 5 /* 2-D only: all broken diagonals too */
} daa_property;

/* Opaque handles. */
typedef struct daa_tensor daa_tensor;
typedef struct daa_poly daa_poly;

/* Echo of how a compound was built; seed names are informational. */
typedef struct daa_recipe {
  daa_variant variant;
  int k; /* class parameter; ignored for gapda */
  int m; /* order of seed A */
  int n; /* order of seed B */
  char seed_a[128];
  char seed_b[128];
} daa_recipe;

DAA_API const char *daa_version(void);
DAA_API const char *daa_status_name(daa_status status);
DAA_API const char *daa_last_error(void); /* thread-local; "" when clear */
DAA_API void daa_string_free(char *s);

/* -------- tensors ------------------------------------------------------- */

/* A hypercubic tensor with `dims` axes of length `side`; `data` is the flat
 * row-major cell list and `count` must equal side^dims. */
DAA_API daa_status daa_tensor_create(int dims, int side, const int64_t *data, size_t count,
                                     daa_tensor **out);
DAA_API daa_status daa_tensor_ones(int dims, int side, daa_tensor **out);
DAA_API void daa_tensor_free(daa_tensor *t);
DAA_API int daa_tensor_dims(const daa_tensor *t);
DAA_API int daa_tensor_side(const daa_tensor *t);
DAA_API size_t daa_tensor_count(const daa_tensor *t);
DAA_API daa_status daa_tensor_copy_data(const daa_tensor *t, int64_t *buf, size_t count);
DAA_API int daa_tensor_equal(const daa_tensor *a, const daa_tensor *b);

/* -------- construction -------------------------------------------------- */

DAA_API daa_status daa_kron(const daa_tensor *x, const daa_tensor *y, daa_tensor **out);

/* Weighted Kronecker-sum compound of two same-rank seeds (order m·n).
 * k is the class parameter (1 Latin, D full-cover magic); gapda ignores it. */
DAA_API daa_status daa_compound(const daa_tensor *a, const daa_tensor *b, int k, daa_variant v,
                                daa_tensor **out);

/* Conjugates by the perfect multiway shuffle that splits the side into
 * `group_size` groups; side must be divisible by group_size. */
DAA_API daa_status daa_shuffle(const daa_tensor *t, int group_size, daa_tensor **out);

/* Replaces each element of the rank array `base` by gaps[rank]. */
DAA_API daa_status daa_pattern_map(const daa_tensor *base, const int64_t *gaps, size_t count,
                                   daa_tensor **out);

/* -------- sums and properties ------------------------------------------- */

/* S_{n,k} = n(n^k-1)/2. */
DAA_API daa_status daa_magic_sum(int64_t n, int64_t k, int64_t *out);
/* S_{C,k} = n^(k+1)S_{m,k} + mS_{n,k} = mn((mn)^k-1)/2 (both forms checked). */
DAA_API daa_status daa_compound_line_sum(int64_t m, int64_t n, int64_t k, int64_t *out);

/* Common line sum of a semi-magic tensor; DAA_ERR_PRECONDITION otherwise. */
DAA_API daa_status daa_line_sum(const daa_tensor *t, int64_t *out);

/* Sums parallel to `axis` (side^(D-1) of them, row-major by the remaining
 * coordinates). `count` must be at least that many. */
DAA_API daa_status daa_line_sums(const daa_tensor *t, int axis, int64_t *buf, size_t count);

/* Checks one property. k is used by DAA_PROP_FULL_COVER only. On a violation
 * *holds is 0 and, when `witness` is non-NULL, *witness names the first
 * offending line or element. */
DAA_API daa_status daa_check(const daa_tensor *t, daa_property property, int k, int *holds,
                             char **witness);

/* True in *covers iff {a+b} is exactly {0..na*nb-1}. */
DAA_API daa_status daa_check_cover_pair(const int64_t *ga, size_t na, const int64_t *gb, size_t nb,
                                        int *covers);

/* -------- fixture library and GAP catalog ------------------------------- */

DAA_API size_t daa_fixture_count(void);
DAA_API const char *daa_fixture_name(size_t index); /* NULL past the end */
DAA_API daa_status daa_fixture(const char *name, daa_tensor **out);
DAA_API daa_status daa_fixture_provenance(const char *name, char **out);

/* The six basic order-9 compound magic squares in standard form. Fills six
 * fresh handles; the caller frees each. */
DAA_API daa_status daa_frierson_six(daa_tensor *out[6]);

DAA_API size_t daa_gap_table_size(void);
DAA_API daa_status daa_gap_table_row(size_t index, int *order, int *compound_count,
                                     size_t *pair_count);
/* which = 0 for the first sequence of the pair, 1 for the second. */
DAA_API daa_status daa_gap_table_pair(size_t index, size_t pair, int which, int64_t *buf,
                                      size_t cap, size_t *len);

/* -------- exact spectra -------------------------------------------------- */

DAA_API daa_status daa_charpoly(const daa_tensor *m, daa_poly **out);
DAA_API daa_status daa_gramian(const daa_tensor *m, daa_tensor **out);
DAA_API daa_status daa_gramian_charpoly(const daa_tensor *m, daa_poly **out);
DAA_API daa_status daa_rank(const daa_tensor *m, int *rank);

/* Clan index R = sum of fourth powers of the singular values after the
 * dominant one; exact, as a decimal string. Requires a non-negative
 * semi-magic matrix. */
DAA_API daa_status daa_r_index(const daa_tensor *m, char **decimal);

DAA_API void daa_poly_free(daa_poly *p);
DAA_API int daa_poly_degree(const daa_poly *p); /* -1 for the zero polynomial */
DAA_API daa_status daa_poly_coeff(const daa_poly *p, int i, char **decimal);
DAA_API int daa_poly_equal(const daa_poly *a, const daa_poly *b);
DAA_API daa_status daa_poly_to_string(const daa_poly *p, char **out);

/* Monic polynomial whose roots are c times the roots of p (c nonzero). */
DAA_API daa_status daa_poly_scale_roots(const daa_poly *p, int64_t c, daa_poly **out);
/* Exact quotient p/(x - root); DAA_ERR_PRECONDITION on nonzero remainder. */
DAA_API daa_status daa_poly_divide_by_linear(const daa_poly *p, int64_t root, daa_poly **out);

/* Splits p into non-negative integer roots (descending, zeros included).
 * *splits is 0 when p does not factor that way; roots are then untouched. */
DAA_API daa_status daa_poly_integer_roots(const daa_poly *p, int64_t *roots, size_t cap,
                                          size_t *count, int *splits);

/* Predicted compound spectra from seed data alone: sa/sb are the seed line
 * sums, pa/pb (or ga/gb) the seed (Gramian) charpolys of degree m and n. */
DAA_API daa_status daa_predict_charpoly(const daa_poly *pa, const daa_poly *pb, int64_t sa,
                                        int64_t sb, int m, int n, int k, daa_variant v,
                                        daa_poly **out);
DAA_API daa_status daa_predict_gramian_charpoly(const daa_poly *ga, const daa_poly *gb, int64_t sa,
                                                int64_t sb, int m, int n, int k, daa_variant v,
                                                daa_poly **out);

/* Exact polynomial-identity check of both predictions for c built from
 * (a, b) by the given variant and k. */
DAA_API daa_status daa_verify_prediction(const daa_tensor *c, const daa_tensor *a,
                                         const daa_tensor *b, int k, daa_variant v,
                                         int *eigen_match, int *sv_match);

/* Exact randomized check of the annihilation identities
 * (A⊗E)(e⊗w) = 0 and (E⊗B)(v⊗e) = 0 for zero-sum w, v. */
DAA_API daa_status daa_annihilation_check(const daa_tensor *a, const daa_tensor *b, int trials,
                                          uint64_t seed, int *all_annihilated);

/* -------- serialization -------------------------------------------------- */

/* Structured JSON document {dims, side, data[, name][, recipe]}; canonical,
 * bit-exact round trip. */
DAA_API daa_status daa_tensor_to_json(const daa_tensor *t, const char *name,
                                      const daa_recipe *recipe, char **out);
DAA_API daa_status daa_tensor_from_json(const char *text, daa_tensor **out, daa_recipe *recipe,
                                        int *has_recipe);

/* Plain text: rows of integers; blank-line-separated layers for D=3. */
DAA_API daa_status daa_tensor_to_text(const daa_tensor *t, char **out);
DAA_API daa_status daa_tensor_from_text(const char *text, daa_tensor **out);

DAA_API const char *daa_variant_name(daa_variant v);
DAA_API daa_status daa_variant_from_name(const char *name, daa_variant *out);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* DAA_H */
