#ifndef MATRIXMEANS_H
#define MATRIXMEANS_H

/* C interface of the matrixmeans shared library.
 *
 * All objects are opaque handles created and destroyed through this API.
 * Every fallible call returns an mm_status; on failure the out-parameters are
 * left untouched and mm_last_error() describes the problem for the calling
 * thread. Functions taking `const mm_tolerances*` accept NULL for defaults.
 */

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum mm_status {
  MM_OK = 0,
  MM_ERR_BAD_ARGUMENT,
  MM_ERR_PARSE,
  MM_ERR_IO,
  MM_ERR_DIM_MISMATCH,
  MM_ERR_ASYMMETRIC_INPUT,
  MM_ERR_NON_FINITE,
  MM_ERR_NOT_POSITIVE_DEFINITE,
  MM_ERR_NOT_POSITIVE_SEMIDEFINITE,
  MM_ERR_NO_CONVERGENCE,
  MM_ERR_DEGENERATE_WEIGHT,
  MM_ERR_SINGULAR_SYSTEM,
  MM_ERR_NON_FINITE_RESULT,
  MM_ERR_UNKNOWN_NAME,
  MM_ERR_INTERNAL
} mm_status;

typedef struct mm_tolerances {
  double spec; /* spectral residual bound (default 1e-12) */
  double psd;  /* Loewner dead-band slack (default 1e-10) */
  double eq;   /* identity residual bound (default 1e-9) */
} mm_tolerances;

mm_tolerances mm_tolerances_default(void);

const char* mm_status_message(mm_status status);
/* Detail message of the last failure on this thread; empty string if none. */
const char* mm_last_error(void);

typedef enum mm_loewner {
  MM_LOEWNER_EQUAL = 0,
  MM_LOEWNER_STRICT_LESS,
  MM_LOEWNER_LESS_EQUAL,
  MM_LOEWNER_STRICT_GREATER,
  MM_LOEWNER_GREATER_EQUAL,
  MM_LOEWNER_INCOMPARABLE
} mm_loewner;

typedef enum mm_prox_rep {
  MM_PROX_REP_SPLIT = 0,      /* optimize over x_1 + ... + x_n = x          */
  MM_PROX_REP_BARYCENTRIC = 1 /* optimize over w_1 y_1 + ... + w_n y_n = x */
} mm_prox_rep;

typedef enum mm_mean_order {
  MM_MEAN_R_GREATER = 0,
  MM_MEAN_G_GREATER = 1,
  MM_MEAN_EQUAL = 2
} mm_mean_order;

typedef struct mm_matrix mm_matrix;
typedef struct mm_ensemble mm_ensemble;
typedef struct mm_linquad mm_linquad;
typedef struct mm_prox_ensemble mm_prox_ensemble;
typedef struct mm_sweep mm_sweep;
typedef struct mm_report mm_report;

/* ---- symmetric matrices ---- */

mm_status mm_matrix_create(int dim, const double* row_major, const mm_tolerances* tol,
                           mm_matrix** out);
mm_status mm_matrix_identity(int dim, mm_matrix** out);
void mm_matrix_free(mm_matrix* m);
int mm_matrix_dim(const mm_matrix* m);
mm_status mm_matrix_get(const mm_matrix* m, double* row_major_out);
mm_status mm_matrix_read_text(const char* path, const mm_tolerances* tol, mm_matrix** out);
mm_status mm_matrix_write_text(const mm_matrix* m, const char* path);
mm_status mm_matrix_stats(const mm_matrix* m, const mm_tolerances* tol, double* lambda_min,
                          double* lambda_max, double* frobenius_norm);
mm_status mm_matrix_is_psd(const mm_matrix* m, const mm_tolerances* tol, int* out);
mm_status mm_matrix_is_pd(const mm_matrix* m, const mm_tolerances* tol, int* out);
mm_status mm_matrix_inverse(const mm_matrix* m, const mm_tolerances* tol, mm_matrix** out);
mm_status mm_matrix_sqrt_psd(const mm_matrix* m, const mm_tolerances* tol, mm_matrix** out);
mm_status mm_loewner_compare(const mm_matrix* x, const mm_matrix* y, const mm_tolerances* tol,
                             mm_loewner* out);
const char* mm_loewner_name(mm_loewner order);
/* Seeded SPD draw with eigenvalues log-uniform on
 * [1/sqrt(cond_target), sqrt(cond_target)]; deterministic per arguments. */
mm_status mm_matrix_random_spd(uint64_t seed, int dim, double cond_target, mm_matrix** out);

/* ---- ensembles ---- */

mm_status mm_ensemble_create(int count, const mm_matrix* const* matrices, const double* weights,
                             const mm_tolerances* tol, mm_ensemble** out);
mm_status mm_ensemble_read_json(const char* path, const mm_tolerances* tol, mm_ensemble** out);
/* mu as stored in the file ("mu" key, default 1.0). */
mm_status mm_ensemble_file_mu(const char* path, double* mu_out);
mm_status mm_ensemble_write_json(const mm_ensemble* ens, double mu, const char* path);
void mm_ensemble_free(mm_ensemble* ens);
int mm_ensemble_count(const mm_ensemble* ens);
int mm_ensemble_dim(const mm_ensemble* ens);
mm_status mm_ensemble_matrix(const mm_ensemble* ens, int index, mm_matrix** out);
mm_status mm_ensemble_weight(const mm_ensemble* ens, int index, double* out);
/* Reproducible PD ensemble with uniform weights. */
mm_status mm_ensemble_random(uint64_t seed, int dim, int count, double cond_target,
                             const mm_tolerances* tol, mm_ensemble** out);

/* ---- averages ---- */

mm_status mm_resolvent_average(const mm_ensemble* ens, double mu, const mm_tolerances* tol,
                               mm_matrix** out);
mm_status mm_resolvent_average_recursive(const mm_ensemble* ens, double mu,
                                         const mm_tolerances* tol, mm_matrix** out);
mm_status mm_harmonic_average(const mm_ensemble* ens, const mm_tolerances* tol, mm_matrix** out);
mm_status mm_arithmetic_average(const mm_ensemble* ens, mm_matrix** out);
mm_status mm_geometric_mean2(const mm_matrix* a, const mm_matrix* b, const mm_tolerances* tol,
                             mm_matrix** out);

/* ---- resolvent calculus ---- */

mm_status mm_resolvent(const mm_matrix* a, const mm_tolerances* tol, mm_matrix** out);
mm_status mm_yosida(const mm_matrix* a, double mu, const mm_tolerances* tol, mm_matrix** out);
mm_status mm_resolvent_identity_residual(const mm_ensemble* ens, double mu,
                                         const mm_tolerances* tol, double* out);
mm_status mm_yosida_identity_residual(const mm_ensemble* ens, double mu, const mm_tolerances* tol,
                                      double* out);

/* ---- mu sweeps ---- */

mm_status mm_sweep_run(const mm_ensemble* ens, double mu_lo, double mu_hi, int points,
                       const mm_tolerances* tol, mm_sweep** out);
void mm_sweep_free(mm_sweep* sweep);
int mm_sweep_points(const mm_sweep* sweep);
mm_status mm_sweep_row(const mm_sweep* sweep, int index, double* mu, double* dist_arith,
                       double* dist_harm, int* chain_ok);
int mm_sweep_chain_all_ok(const mm_sweep* sweep);
mm_status mm_sweep_write_csv(const mm_sweep* sweep, const char* path);

/* ---- linear-quadratic functions and proximal averages ---- */

mm_status mm_linquad_create(int dim, const double* a_row_major, const double* b, double r,
                            const mm_tolerances* tol, mm_linquad** out);
mm_status mm_linquad_read_json(const char* path, const mm_tolerances* tol, mm_linquad** out);
mm_status mm_linquad_write_json(const mm_linquad* f, const char* path);
void mm_linquad_free(mm_linquad* f);
int mm_linquad_dim(const mm_linquad* f);
mm_status mm_linquad_coefficients(const mm_linquad* f, double* a_row_major, double* b, double* r);
mm_status mm_linquad_eval(const mm_linquad* f, const double* x, double* out);
mm_status mm_linquad_gradient(const mm_linquad* f, const double* x, double* out);
mm_status mm_linquad_conjugate(const mm_linquad* f, const mm_tolerances* tol, mm_linquad** out);

mm_status mm_prox_ensemble_create(int count, const mm_linquad* const* funcs,
                                  const double* weights, double mu, const mm_tolerances* tol,
                                  mm_prox_ensemble** out);
mm_status mm_prox_ensemble_read_json(const char* path, const mm_tolerances* tol,
                                     mm_prox_ensemble** out);
void mm_prox_ensemble_free(mm_prox_ensemble* pens);
int mm_prox_ensemble_count(const mm_prox_ensemble* pens);
int mm_prox_ensemble_dim(const mm_prox_ensemble* pens);
double mm_prox_ensemble_mu(const mm_prox_ensemble* pens);

mm_status mm_prox_average_closed(const mm_prox_ensemble* pens, const mm_tolerances* tol,
                                 mm_linquad** out);
/* KKT-based evaluation of the proximal average at x (independent of the
 * closed form). */
mm_status mm_prox_average_value(const mm_prox_ensemble* pens, const double* x, mm_prox_rep rep,
                                const mm_tolerances* tol, double* out);
mm_status mm_prox_fenchel_residual(const mm_prox_ensemble* pens, const mm_tolerances* tol,
                                   double* residual, double* scale);
mm_status mm_prox_mu_monotone(const mm_prox_ensemble* pens, double mu_lo, double mu_hi,
                              const double* x, const mm_tolerances* tol, int* ok);

/* ---- scalar means ---- */

/* harmonic is set to NaN when some x_i == 0 (undefined there). */
mm_status mm_scalar_means(int count, const double* xs, const double* weights,
                          const mm_tolerances* tol, double* harmonic, double* geometric,
                          double* resolvent, double* arithmetic, mm_mean_order* order);
const char* mm_mean_order_name(mm_mean_order order);

/* ---- property suite ---- */

typedef struct mm_suite_config {
  uint64_t seed;
  int trials;
  int dim_max;
  int n_max;
  double cond_max;
  const double* mu_set; /* NULL for the default {0.01, 0.1, 1, 10, 100} */
  int mu_count;
  mm_tolerances tol;
} mm_suite_config;

mm_suite_config mm_suite_config_default(void);

int mm_suite_name_count(void);
const char* mm_suite_name(int index);

/* suite_name is a registered check name or "all". */
mm_status mm_suite_run(const mm_suite_config* config, const char* suite_name, mm_report** out);
void mm_report_free(mm_report* report);
int mm_report_pass(const mm_report* report);
int mm_report_count(const mm_report* report);
mm_status mm_report_record(const mm_report* report, int index, char* name_buf, size_t name_cap,
                           int* trials, int* failures, double* worst_residual,
                           uint64_t* worst_seed_offset);
/* Serialized forms; free the returned strings with mm_string_free. */
char* mm_report_to_json(const mm_report* report);
char* mm_report_to_table(const mm_report* report);
mm_status mm_report_write_json(const mm_report* report, const char* path);
void mm_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif /* MATRIXMEANS_H */
