/* banmf: Boolean matrix factorization via a nonnegative auxiliary matrix.
 *
 * C interface to the solver, Booleanization, baselines, synthetic data
 * generators, exact rank, and the exhaustive search oracle. All objects are
 * opaque handles created and destroyed through this API; every fallible call
 * returns a banmf_status, with a thread-local message available from
 * banmf_last_error() after a failure.
 *
 * Ownership: *_create / banmf_solve / ... return objects the caller frees
 * with the matching *_free. Accessors returning pointers (matrix views, data
 * buffers, strings) borrow from the parent object and are valid only while
 * it lives. Handles are not thread-safe; distinct handles may be used from
 * distinct threads concurrently.
 */
#ifndef BANMF_H
#define BANMF_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#if defined(BANMF_BUILDING_SHARED)
#define BANMF_API __declspec(dllexport)
#else
#define BANMF_API __declspec(dllimport)
#endif
#else
#define BANMF_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum banmf_status {
    BANMF_OK = 0,
    BANMF_ERR_DIM = 1,      /* shape mismatch between operands */
    BANMF_ERR_ARG = 2,      /* invalid argument or configuration */
    BANMF_ERR_EMPTY = 3,    /* input matrix has empty support */
    BANMF_ERR_BUDGET = 4,   /* search space or retry budget exceeded */
    BANMF_ERR_IO = 5,       /* file could not be opened or written */
    BANMF_ERR_PARSE = 6,    /* malformed file content */
    BANMF_ERR_INTERNAL = 7  /* unexpected failure */
} banmf_status;

/* Message for the most recent failing call on this thread; empty string if
 * the last call succeeded. The buffer is invalidated by the next API call. */
BANMF_API const char* banmf_last_error(void);

/* Stable lower-case name for a status code, e.g. "ok", "dim_error". */
BANMF_API const char* banmf_status_name(banmf_status s);

BANMF_API const char* banmf_version(void);

/* ---- matrices ---------------------------------------------------------- */

typedef struct banmf_bool banmf_bool;    /* 0/1 matrix, row-major uint8 */
typedef struct banmf_dense banmf_dense;  /* real matrix, row-major double */

/* data may be NULL for an all-zero matrix; otherwise rows*cols entries,
 * row-major, each 0 or 1. */
BANMF_API banmf_status banmf_bool_create(size_t rows, size_t cols, const uint8_t* data,
                                         banmf_bool** out);
BANMF_API void banmf_bool_free(banmf_bool* m);
BANMF_API size_t banmf_bool_rows(const banmf_bool* m);
BANMF_API size_t banmf_bool_cols(const banmf_bool* m);
BANMF_API banmf_status banmf_bool_get(const banmf_bool* m, size_t i, size_t j, uint8_t* out);
BANMF_API banmf_status banmf_bool_set(banmf_bool* m, size_t i, size_t j, uint8_t value);
/* Row-major borrow of the backing buffer (rows*cols entries). */
BANMF_API const uint8_t* banmf_bool_data(const banmf_bool* m);

BANMF_API banmf_status banmf_dense_create(size_t rows, size_t cols, const double* data,
                                          banmf_dense** out);
BANMF_API void banmf_dense_free(banmf_dense* m);
BANMF_API size_t banmf_dense_rows(const banmf_dense* m);
BANMF_API size_t banmf_dense_cols(const banmf_dense* m);
BANMF_API banmf_status banmf_dense_get(const banmf_dense* m, size_t i, size_t j, double* out);
BANMF_API banmf_status banmf_dense_set(banmf_dense* m, size_t i, size_t j, double value);
BANMF_API const double* banmf_dense_data(const banmf_dense* m);

/* Boolean product: out(i,j) = OR_l (w(i,l) AND h(l,j)). */
BANMF_API banmf_status banmf_bool_product(const banmf_bool* w, const banmf_bool* h,
                                          banmf_bool** out);
/* Number of entries where a and b disagree. */
BANMF_API banmf_status banmf_hamming(const banmf_bool* a, const banmf_bool* b, uint64_t* out);
/* Hamming disagreement divided by rows*cols. */
BANMF_API banmf_status banmf_relative_error(const banmf_bool* a, const banmf_bool* b,
                                            double* out);
/* Frobenius norm of a - b. */
BANMF_API banmf_status banmf_frobenius_error(const banmf_dense* a, const banmf_dense* b,
                                             double* out);

/* ---- solver ------------------------------------------------------------ */

typedef struct banmf_solver_config {
    uint32_t rank;          /* latent dimension k, >= 1 */
    uint32_t max_iters;     /* >= 1 */
    double lambda;          /* binarity regularization weight, 0 disables */
    double epsilon;         /* update denominator guard, > 0 */
    uint64_t seed;
    int early_stop;         /* nonzero enables the relative-change stop rule */
    double early_stop_tol;  /* used only when early_stop is nonzero */
} banmf_solver_config;

/* rank 1, 1000 iterations, lambda 0, epsilon 1e-12, seed 0, early stop off. */
BANMF_API banmf_solver_config banmf_default_config(void);

typedef struct banmf_result banmf_result;

/* Auxiliary-matrix solve: alternates multiplicative updates of W and H with
 * the projection of Y onto {0 off support(x), [1, k] on it}. */
BANMF_API banmf_status banmf_solve(const banmf_bool* x, banmf_solver_config cfg,
                                   banmf_result** out);
/* Plain / regularized NMF baseline: identical loop with Y frozen at x. */
BANMF_API banmf_status banmf_nmf_solve(const banmf_bool* x, banmf_solver_config cfg,
                                       banmf_result** out);
BANMF_API void banmf_result_free(banmf_result* r);
BANMF_API const banmf_dense* banmf_result_w(const banmf_result* r);
BANMF_API const banmf_dense* banmf_result_h(const banmf_result* r);
BANMF_API const banmf_dense* banmf_result_y(const banmf_result* r);
BANMF_API uint32_t banmf_result_iterations(const banmf_result* r);
BANMF_API size_t banmf_result_trace_len(const banmf_result* r);
/* ||Y - WH||_F after each full iteration; trace_len entries. */
BANMF_API const double* banmf_result_trace(const banmf_result* r);
/* Wall time of the iteration loop only (milliseconds). */
BANMF_API double banmf_result_loop_ms(const banmf_result* r);

/* ---- Booleanization ----------------------------------------------------- */

/* Strict threshold: out(i,j) = 1 iff c(i,j) > delta. Requires delta >= 0. */
BANMF_API banmf_status banmf_threshold(const banmf_dense* c, double delta, banmf_bool** out);

typedef struct banmf_choice banmf_choice;

/* Grid search over npoint^2 threshold pairs (each grid is npoint equispaced
 * values over the factor's range plus 0) minimizing the Hamming error of the
 * Boolean reconstruction against x. Ties go to the smallest (delta_w,
 * delta_h) in lexicographic order. Requires npoint >= 2. */
BANMF_API banmf_status banmf_booleanize(const banmf_bool* x, const banmf_dense* w,
                                        const banmf_dense* h, size_t npoint,
                                        banmf_choice** out);
BANMF_API void banmf_choice_free(banmf_choice* c);
BANMF_API double banmf_choice_delta_w(const banmf_choice* c);
BANMF_API double banmf_choice_delta_h(const banmf_choice* c);
BANMF_API uint64_t banmf_choice_hamming(const banmf_choice* c);
BANMF_API const banmf_bool* banmf_choice_w(const banmf_choice* c);
BANMF_API const banmf_bool* banmf_choice_h(const banmf_choice* c);

/* ---- synthetic data ----------------------------------------------------- */

/* Per-entry factor density p with sqrt(1 - (1 - d)^(1/k)), so that a rank-k
 * Bernoulli(p) planted product has expected density d. Requires d in (0,1),
 * k >= 1. */
BANMF_API banmf_status banmf_factor_density(double density, uint32_t rank, double* out);

typedef struct banmf_synth_spec {
    size_t rows;
    size_t cols;
    uint32_t rank;
    double density;  /* target density of the clean product, in (0,1) */
    double noise;    /* flip probability p_E, in [0,1) */
    uint64_t seed;
} banmf_synth_spec;

typedef struct banmf_instance banmf_instance;

/* Planted instance: W (rows x rank) and H (rank x cols) with Bernoulli(p)
 * entries, X = Boolean product plus flip noise. Draws are retried (up to 100
 * times) until the clean product has nonempty support. */
BANMF_API banmf_status banmf_generate_planted(banmf_synth_spec spec, banmf_instance** out);
BANMF_API void banmf_instance_free(banmf_instance* inst);
BANMF_API const banmf_bool* banmf_instance_x(const banmf_instance* inst);
BANMF_API const banmf_bool* banmf_instance_w(const banmf_instance* inst);
BANMF_API const banmf_bool* banmf_instance_h(const banmf_instance* inst);
BANMF_API const banmf_bool* banmf_instance_x_clean(const banmf_instance* inst);
/* Lower bound on the rank gap, real rank(x_clean) - k; 0 if not computed
 * (returns whether it was via the int result). */
BANMF_API int banmf_instance_gap(const banmf_instance* inst, int64_t* out);
/* Generation parameters the instance was drawn from. */
BANMF_API banmf_status banmf_instance_spec(const banmf_instance* inst, banmf_synth_spec* out);

/* Independently flips each entry of x with probability p. */
BANMF_API banmf_status banmf_flip_noise(const banmf_bool* x, double p, uint64_t seed,
                                        banmf_bool** out);

/* Exact rank of x over the rationals (fraction-free integer elimination). */
BANMF_API banmf_status banmf_exact_rank(const banmf_bool* x, size_t* out);

/* ---- rank-gap suite ----------------------------------------------------- */

typedef struct banmf_rank_gap_params {
    const size_t* n_values;
    size_t n_count;
    const size_t* m_values;
    size_t m_count;
    const uint32_t* k_values;
    size_t k_count;
    const double* densities;
    size_t density_count;
    size_t per_cell;      /* instances per (n, m, k, density) cell */
    uint64_t seed;
    size_t retry_budget;  /* draws per instance before the cell is skipped */
} banmf_rank_gap_params;

typedef struct banmf_suite banmf_suite;

/* Instances over the (n, m, k, density) grid with exact-rank gap annotations,
 * keeping only draws with rank(x_clean) >= k. Cells whose retry budget runs
 * out are skipped with a warning. */
BANMF_API banmf_status banmf_rank_gap_suite(banmf_rank_gap_params params, banmf_suite** out);
BANMF_API void banmf_suite_free(banmf_suite* s);
BANMF_API size_t banmf_suite_size(const banmf_suite* s);
BANMF_API const banmf_instance* banmf_suite_instance(const banmf_suite* s, size_t index);
BANMF_API size_t banmf_suite_warning_count(const banmf_suite* s);
BANMF_API const char* banmf_suite_warning(const banmf_suite* s, size_t index);

/* ---- exhaustive oracle --------------------------------------------------- */

typedef struct banmf_oracle banmf_oracle;

/* Minimum-Hamming rank-k Boolean factorization of x by exhaustive search.
 * budget 0 means the default cap of 2^24 candidate pairs; a larger search
 * space fails with BANMF_ERR_BUDGET. Ties go to the lexicographically
 * smallest (W, H) read row-major, W first. */
BANMF_API banmf_status banmf_exhaustive_bmf(const banmf_bool* x, uint32_t rank,
                                            uint64_t budget, banmf_oracle** out);
BANMF_API void banmf_oracle_free(banmf_oracle* o);
BANMF_API const banmf_bool* banmf_oracle_w(const banmf_oracle* o);
BANMF_API const banmf_bool* banmf_oracle_h(const banmf_oracle* o);
BANMF_API uint64_t banmf_oracle_min_hamming(const banmf_oracle* o);

/* ---- CSV ---------------------------------------------------------------- */

/* Comma-separated values, one matrix row per line. Readers reject tokens
 * other than 0/1 (bool) or numbers (dense) with a (line, field) location,
 * and reject "?" with a message asking for pre-filtered input. header on a
 * writer emits that line first; skip_header on a reader drops the first
 * line unparsed. */
BANMF_API banmf_status banmf_read_bool_csv(const char* path, int skip_header, banmf_bool** out);
BANMF_API banmf_status banmf_write_bool_csv(const char* path, const banmf_bool* m,
                                            const char* header);
BANMF_API banmf_status banmf_read_dense_csv(const char* path, int skip_header,
                                            banmf_dense** out);
BANMF_API banmf_status banmf_write_dense_csv(const char* path, const banmf_dense* m,
                                             const char* header);

/* ---- seeds -------------------------------------------------------------- */

/* Deterministic seed derivation: splitmix64 chain over (base, path...).
 * Identical inputs give identical seeds on every platform. */
BANMF_API uint64_t banmf_derive_seed(uint64_t base, const uint64_t* path, size_t path_len);

#ifdef __cplusplus
}
#endif

#endif /* BANMF_H */
