#include "matrixmeans.h"

#include <algorithm>
#include <cstring>
#include <limits>
#include <new>
#include <string>

#include "core/io.hpp"
#include "core/random_instances.hpp"

struct mm_matrix {
  mm::SymMatrix value;
};
struct mm_ensemble {
  mm::Ensemble value;
};
struct mm_linquad {
  mm::LinQuad value;
};
struct mm_prox_ensemble {
  mm::ProxEnsemble value;
};
struct mm_sweep {
  mm::SweepReport value;
};
struct mm_report {
  mm::CheckReport value;
};

namespace {

thread_local std::string g_last_error;

mm_status map_code(mm::Errc code) {
  switch (code) {
    case mm::Errc::BadArgument: return MM_ERR_BAD_ARGUMENT;
    case mm::Errc::ParseError: return MM_ERR_PARSE;
    case mm::Errc::Io: return MM_ERR_IO;
    case mm::Errc::DimMismatch: return MM_ERR_DIM_MISMATCH;
    case mm::Errc::AsymmetricInput: return MM_ERR_ASYMMETRIC_INPUT;
    case mm::Errc::NonFinite: return MM_ERR_NON_FINITE;
    case mm::Errc::NotPositiveDefinite: return MM_ERR_NOT_POSITIVE_DEFINITE;
    case mm::Errc::NotPositiveSemidefinite: return MM_ERR_NOT_POSITIVE_SEMIDEFINITE;
    case mm::Errc::NoConvergence: return MM_ERR_NO_CONVERGENCE;
    case mm::Errc::DegenerateWeight: return MM_ERR_DEGENERATE_WEIGHT;
    case mm::Errc::SingularSystem: return MM_ERR_SINGULAR_SYSTEM;
    case mm::Errc::NonFiniteResult: return MM_ERR_NON_FINITE_RESULT;
    case mm::Errc::UnknownName: return MM_ERR_UNKNOWN_NAME;
  }
  return MM_ERR_INTERNAL;
}

template <class F>
mm_status guarded(F&& f) noexcept {
  try {
    f();
    g_last_error.clear();
    return MM_OK;
  } catch (const mm::Error& e) {
    g_last_error = e.what();
    return map_code(e.code());
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return MM_ERR_INTERNAL;
  } catch (...) {
    g_last_error = "unknown failure";
    return MM_ERR_INTERNAL;
  }
}

mm::Tolerances tol_of(const mm_tolerances* tol) {
  if (!tol) return {};
  mm::Tolerances t;
  t.spec = tol->spec;
  t.psd = tol->psd;
  t.eq = tol->eq;
  return t;
}

void require(bool cond, const char* msg) {
  if (!cond) mm::fail(mm::Errc::BadArgument, msg);
}

char* dup_string(const std::string& s) {
  char* out = new (std::nothrow) char[s.size() + 1];
  if (!out) return nullptr;
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

mm::SuiteConfig config_of(const mm_suite_config* config) {
  require(config != nullptr, "config must not be null");
  mm::SuiteConfig cfg;
  cfg.seed = config->seed;
  cfg.trials = config->trials;
  cfg.dim_max = config->dim_max;
  cfg.n_max = config->n_max;
  cfg.cond_max = config->cond_max;
  if (config->mu_set) {
    require(config->mu_count > 0, "mu_count must be positive when mu_set is given");
    cfg.mu_set.assign(config->mu_set, config->mu_set + config->mu_count);
  }
  cfg.tol = tol_of(&config->tol);
  return cfg;
}

}  // namespace

extern "C" {

mm_tolerances mm_tolerances_default(void) {
  const mm::Tolerances t;
  return {t.spec, t.psd, t.eq};
}

const char* mm_status_message(mm_status status) {
  switch (status) {
    case MM_OK: return "ok";
    case MM_ERR_BAD_ARGUMENT: return "bad argument";
    case MM_ERR_PARSE: return "parse error";
    case MM_ERR_IO: return "i/o error";
    case MM_ERR_DIM_MISMATCH: return "dimension mismatch";
    case MM_ERR_ASYMMETRIC_INPUT: return "asymmetric input";
    case MM_ERR_NON_FINITE: return "non-finite input";
    case MM_ERR_NOT_POSITIVE_DEFINITE: return "not positive definite";
    case MM_ERR_NOT_POSITIVE_SEMIDEFINITE: return "not positive semidefinite";
    case MM_ERR_NO_CONVERGENCE: return "no convergence";
    case MM_ERR_DEGENERATE_WEIGHT: return "degenerate weight";
    case MM_ERR_SINGULAR_SYSTEM: return "singular system";
    case MM_ERR_NON_FINITE_RESULT: return "non-finite result";
    case MM_ERR_UNKNOWN_NAME: return "unknown name";
    case MM_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* mm_last_error(void) { return g_last_error.c_str(); }

/* ---- matrices ---- */

mm_status mm_matrix_create(int dim, const double* row_major, const mm_tolerances* tol,
                           mm_matrix** out) {
  return guarded([&] {
    require(row_major && out, "null pointer");
    *out = new mm_matrix{mm::SymMatrix::from_flat(
        dim, std::span<const double>(row_major, static_cast<std::size_t>(dim) * dim),
        tol_of(tol))};
  });
}

mm_status mm_matrix_identity(int dim, mm_matrix** out) {
  return guarded([&] {
    require(out != nullptr, "null pointer");
    *out = new mm_matrix{mm::SymMatrix::identity(dim)};
  });
}

void mm_matrix_free(mm_matrix* m) { delete m; }

int mm_matrix_dim(const mm_matrix* m) { return m ? m->value.dim() : 0; }

mm_status mm_matrix_get(const mm_matrix* m, double* row_major_out) {
  return guarded([&] {
    require(m && row_major_out, "null pointer");
    const auto flat = m->value.flat();
    std::memcpy(row_major_out, flat.data(), flat.size() * sizeof(double));
  });
}

mm_status mm_matrix_read_text(const char* path, const mm_tolerances* tol, mm_matrix** out) {
  return guarded([&] {
    require(path && out, "null pointer");
    *out = new mm_matrix{mm::read_matrix_text_file(path, tol_of(tol))};
  });
}

mm_status mm_matrix_write_text(const mm_matrix* m, const char* path) {
  return guarded([&] {
    require(m && path, "null pointer");
    mm::write_matrix_text_file(m->value, path);
  });
}

mm_status mm_matrix_stats(const mm_matrix* m, const mm_tolerances* tol, double* lambda_min,
                          double* lambda_max, double* frobenius_norm) {
  return guarded([&] {
    require(m != nullptr, "null pointer");
    const mm::Spectrum sp = mm::eigendecompose(m->value, tol_of(tol));
    if (lambda_min) *lambda_min = sp.lambda_min();
    if (lambda_max) *lambda_max = sp.lambda_max();
    if (frobenius_norm) *frobenius_norm = m->value.frobenius_norm();
  });
}

mm_status mm_matrix_is_psd(const mm_matrix* m, const mm_tolerances* tol, int* out) {
  return guarded([&] {
    require(m && out, "null pointer");
    *out = mm::is_psd(m->value, tol_of(tol)) ? 1 : 0;
  });
}

mm_status mm_matrix_is_pd(const mm_matrix* m, const mm_tolerances* tol, int* out) {
  return guarded([&] {
    require(m && out, "null pointer");
    *out = mm::is_pd(m->value, tol_of(tol)) ? 1 : 0;
  });
}

mm_status mm_matrix_inverse(const mm_matrix* m, const mm_tolerances* tol, mm_matrix** out) {
  return guarded([&] {
    require(m && out, "null pointer");
    *out = new mm_matrix{mm::inverse(m->value, tol_of(tol))};
  });
}

mm_status mm_matrix_sqrt_psd(const mm_matrix* m, const mm_tolerances* tol, mm_matrix** out) {
  return guarded([&] {
    require(m && out, "null pointer");
    *out = new mm_matrix{mm::sqrt_psd(m->value, tol_of(tol))};
  });
}

mm_status mm_loewner_compare(const mm_matrix* x, const mm_matrix* y, const mm_tolerances* tol,
                             mm_loewner* out) {
  return guarded([&] {
    require(x && y && out, "null pointer");
    *out = static_cast<mm_loewner>(mm::loewner_cmp(x->value, y->value, tol_of(tol)));
  });
}

const char* mm_loewner_name(mm_loewner order) {
  return mm::to_string(static_cast<mm::LoewnerOrdering>(order));
}

mm_status mm_matrix_random_spd(uint64_t seed, int dim, double cond_target, mm_matrix** out) {
  return guarded([&] {
    require(out != nullptr, "null pointer");
    *out = new mm_matrix{mm::random_spd(seed, dim, cond_target)};
  });
}

/* ---- ensembles ---- */

mm_status mm_ensemble_create(int count, const mm_matrix* const* matrices, const double* weights,
                             const mm_tolerances* tol, mm_ensemble** out) {
  return guarded([&] {
    require(matrices && weights && out, "null pointer");
    require(count >= 1, "count must be >= 1");
    std::vector<mm::SymMatrix> mats;
    mats.reserve(count);
    for (int i = 0; i < count; ++i) {
      require(matrices[i] != nullptr, "null matrix handle");
      mats.push_back(matrices[i]->value);
    }
    *out = new mm_ensemble{
        mm::Ensemble(std::move(mats), mm::Vec(weights, weights + count), tol_of(tol))};
  });
}

mm_status mm_ensemble_read_json(const char* path, const mm_tolerances* tol, mm_ensemble** out) {
  return guarded([&] {
    require(path && out, "null pointer");
    *out = new mm_ensemble{mm::read_ensemble_json_file(path, tol_of(tol))};
  });
}

mm_status mm_ensemble_file_mu(const char* path, double* mu_out) {
  return guarded([&] {
    require(path && mu_out, "null pointer");
    double mu = 1.0;
    mm::read_ensemble_json_file(path, {}, &mu);
    *mu_out = mu;
  });
}

mm_status mm_ensemble_write_json(const mm_ensemble* ens, double mu, const char* path) {
  return guarded([&] {
    require(ens && path, "null pointer");
    mm::write_ensemble_json_file(ens->value, mu, path);
  });
}

void mm_ensemble_free(mm_ensemble* ens) { delete ens; }

int mm_ensemble_count(const mm_ensemble* ens) { return ens ? ens->value.count() : 0; }

int mm_ensemble_dim(const mm_ensemble* ens) { return ens ? ens->value.dim() : 0; }

mm_status mm_ensemble_matrix(const mm_ensemble* ens, int index, mm_matrix** out) {
  return guarded([&] {
    require(ens && out, "null pointer");
    require(index >= 0 && index < ens->value.count(), "matrix index out of range");
    *out = new mm_matrix{ens->value.matrix(index)};
  });
}

mm_status mm_ensemble_weight(const mm_ensemble* ens, int index, double* out) {
  return guarded([&] {
    require(ens && out, "null pointer");
    require(index >= 0 && index < ens->value.count(), "weight index out of range");
    *out = ens->value.weight(index);
  });
}

mm_status mm_ensemble_random(uint64_t seed, int dim, int count, double cond_target,
                             const mm_tolerances* tol, mm_ensemble** out) {
  return guarded([&] {
    require(out != nullptr, "null pointer");
    require(count >= 1, "count must be >= 1");
    mm::Rng rng(seed);
    std::vector<mm::SymMatrix> mats;
    mats.reserve(count);
    for (int i = 0; i < count; ++i) mats.push_back(mm::random_spd(rng, dim, cond_target));
    *out = new mm_ensemble{
        mm::Ensemble(std::move(mats), mm::Vec(count, 1.0 / count), tol_of(tol))};
  });
}

/* ---- averages ---- */

mm_status mm_resolvent_average(const mm_ensemble* ens, double mu, const mm_tolerances* tol,
                               mm_matrix** out) {
  return guarded([&] {
    require(ens && out, "null pointer");
    *out = new mm_matrix{mm::resolvent_average(ens->value, mm::MuParam(mu), tol_of(tol))};
  });
}

mm_status mm_resolvent_average_recursive(const mm_ensemble* ens, double mu,
                                         const mm_tolerances* tol, mm_matrix** out) {
  return guarded([&] {
    require(ens && out, "null pointer");
    *out =
        new mm_matrix{mm::resolvent_average_recursive(ens->value, mm::MuParam(mu), tol_of(tol))};
  });
}

mm_status mm_harmonic_average(const mm_ensemble* ens, const mm_tolerances* tol, mm_matrix** out) {
  return guarded([&] {
    require(ens && out, "null pointer");
    *out = new mm_matrix{mm::harmonic_average(ens->value, tol_of(tol))};
  });
}

mm_status mm_arithmetic_average(const mm_ensemble* ens, mm_matrix** out) {
  return guarded([&] {
    require(ens && out, "null pointer");
    *out = new mm_matrix{mm::arithmetic_average(ens->value)};
  });
}

mm_status mm_geometric_mean2(const mm_matrix* a, const mm_matrix* b, const mm_tolerances* tol,
                             mm_matrix** out) {
  return guarded([&] {
    require(a && b && out, "null pointer");
    *out = new mm_matrix{mm::geometric_mean2(a->value, b->value, tol_of(tol))};
  });
}

/* ---- resolvent calculus ---- */

mm_status mm_resolvent(const mm_matrix* a, const mm_tolerances* tol, mm_matrix** out) {
  return guarded([&] {
    require(a && out, "null pointer");
    *out = new mm_matrix{mm::resolvent(a->value, tol_of(tol))};
  });
}

mm_status mm_yosida(const mm_matrix* a, double mu, const mm_tolerances* tol, mm_matrix** out) {
  return guarded([&] {
    require(a && out, "null pointer");
    *out = new mm_matrix{mm::yosida(a->value, mm::MuParam(mu), tol_of(tol))};
  });
}

mm_status mm_resolvent_identity_residual(const mm_ensemble* ens, double mu,
                                         const mm_tolerances* tol, double* out) {
  return guarded([&] {
    require(ens && out, "null pointer");
    *out = mm::resolvent_identity_residual(ens->value, mm::MuParam(mu), tol_of(tol));
  });
}

mm_status mm_yosida_identity_residual(const mm_ensemble* ens, double mu, const mm_tolerances* tol,
                                      double* out) {
  return guarded([&] {
    require(ens && out, "null pointer");
    *out = mm::yosida_identity_residual(ens->value, mm::MuParam(mu), tol_of(tol));
  });
}

/* ---- sweeps ---- */

mm_status mm_sweep_run(const mm_ensemble* ens, double mu_lo, double mu_hi, int points,
                       const mm_tolerances* tol, mm_sweep** out) {
  return guarded([&] {
    require(ens && out, "null pointer");
    *out = new mm_sweep{mm::mu_sweep(ens->value, mu_lo, mu_hi, points, tol_of(tol))};
  });
}

void mm_sweep_free(mm_sweep* sweep) { delete sweep; }

int mm_sweep_points(const mm_sweep* sweep) {
  return sweep ? static_cast<int>(sweep->value.grid.size()) : 0;
}

mm_status mm_sweep_row(const mm_sweep* sweep, int index, double* mu, double* dist_arith,
                       double* dist_harm, int* chain_ok) {
  return guarded([&] {
    require(sweep != nullptr, "null pointer");
    require(index >= 0 && index < static_cast<int>(sweep->value.grid.size()),
            "sweep row out of range");
    if (mu) *mu = sweep->value.grid[index];
    if (dist_arith) *dist_arith = sweep->value.dist_arith[index];
    if (dist_harm) *dist_harm = sweep->value.dist_harm[index];
    if (chain_ok) *chain_ok = sweep->value.chain_ok[index] ? 1 : 0;
  });
}

int mm_sweep_chain_all_ok(const mm_sweep* sweep) {
  return sweep && sweep->value.all_chain_ok() ? 1 : 0;
}

mm_status mm_sweep_write_csv(const mm_sweep* sweep, const char* path) {
  return guarded([&] {
    require(sweep && path, "null pointer");
    mm::write_sweep_csv_file(sweep->value, path);
  });
}

/* ---- linear-quadratic functions ---- */

mm_status mm_linquad_create(int dim, const double* a_row_major, const double* b, double r,
                            const mm_tolerances* tol, mm_linquad** out) {
  return guarded([&] {
    require(a_row_major && b && out, "null pointer");
    mm::SymMatrix a = mm::SymMatrix::from_flat(
        dim, std::span<const double>(a_row_major, static_cast<std::size_t>(dim) * dim),
        tol_of(tol));
    *out = new mm_linquad{mm::LinQuad(std::move(a), mm::Vec(b, b + dim), r, tol_of(tol))};
  });
}

mm_status mm_linquad_read_json(const char* path, const mm_tolerances* tol, mm_linquad** out) {
  return guarded([&] {
    require(path && out, "null pointer");
    *out = new mm_linquad{mm::read_linquad_json_file(path, tol_of(tol))};
  });
}

mm_status mm_linquad_write_json(const mm_linquad* f, const char* path) {
  return guarded([&] {
    require(f && path, "null pointer");
    mm::write_linquad_json_file(f->value, path);
  });
}

void mm_linquad_free(mm_linquad* f) { delete f; }

int mm_linquad_dim(const mm_linquad* f) { return f ? f->value.dim() : 0; }

mm_status mm_linquad_coefficients(const mm_linquad* f, double* a_row_major, double* b,
                                  double* r) {
  return guarded([&] {
    require(f != nullptr, "null pointer");
    if (a_row_major) {
      const auto flat = f->value.quad().flat();
      std::memcpy(a_row_major, flat.data(), flat.size() * sizeof(double));
    }
    if (b) std::memcpy(b, f->value.linear().data(), f->value.linear().size() * sizeof(double));
    if (r) *r = f->value.constant();
  });
}

mm_status mm_linquad_eval(const mm_linquad* f, const double* x, double* out) {
  return guarded([&] {
    require(f && x && out, "null pointer");
    *out = f->value.eval(std::span<const double>(x, f->value.dim()));
  });
}

mm_status mm_linquad_gradient(const mm_linquad* f, const double* x, double* out) {
  return guarded([&] {
    require(f && x && out, "null pointer");
    const mm::Vec g = f->value.gradient(std::span<const double>(x, f->value.dim()));
    std::memcpy(out, g.data(), g.size() * sizeof(double));
  });
}

mm_status mm_linquad_conjugate(const mm_linquad* f, const mm_tolerances* tol, mm_linquad** out) {
  return guarded([&] {
    require(f && out, "null pointer");
    *out = new mm_linquad{mm::conjugate_linquad(f->value, tol_of(tol))};
  });
}

/* ---- prox ensembles ---- */

mm_status mm_prox_ensemble_create(int count, const mm_linquad* const* funcs,
                                  const double* weights, double mu, const mm_tolerances* tol,
                                  mm_prox_ensemble** out) {
  return guarded([&] {
    require(funcs && weights && out, "null pointer");
    require(count >= 1, "count must be >= 1");
    std::vector<mm::LinQuad> fs;
    fs.reserve(count);
    for (int i = 0; i < count; ++i) {
      require(funcs[i] != nullptr, "null function handle");
      fs.push_back(funcs[i]->value);
    }
    *out = new mm_prox_ensemble{mm::ProxEnsemble(std::move(fs), mm::Vec(weights, weights + count),
                                                 mm::MuParam(mu), tol_of(tol))};
  });
}

mm_status mm_prox_ensemble_read_json(const char* path, const mm_tolerances* tol,
                                     mm_prox_ensemble** out) {
  return guarded([&] {
    require(path && out, "null pointer");
    *out = new mm_prox_ensemble{mm::read_prox_ensemble_json_file(path, tol_of(tol))};
  });
}

void mm_prox_ensemble_free(mm_prox_ensemble* pens) { delete pens; }

int mm_prox_ensemble_count(const mm_prox_ensemble* pens) {
  return pens ? pens->value.count() : 0;
}

int mm_prox_ensemble_dim(const mm_prox_ensemble* pens) { return pens ? pens->value.dim() : 0; }

double mm_prox_ensemble_mu(const mm_prox_ensemble* pens) { return pens ? pens->value.mu() : 0.0; }

mm_status mm_prox_average_closed(const mm_prox_ensemble* pens, const mm_tolerances* tol,
                                 mm_linquad** out) {
  return guarded([&] {
    require(pens && out, "null pointer");
    *out = new mm_linquad{mm::prox_average_closed(pens->value, tol_of(tol))};
  });
}

mm_status mm_prox_average_value(const mm_prox_ensemble* pens, const double* x, mm_prox_rep rep,
                                const mm_tolerances* tol, double* out) {
  return guarded([&] {
    require(pens && x && out, "null pointer");
    const mm::ProxRep r =
        rep == MM_PROX_REP_SPLIT ? mm::ProxRep::Split : mm::ProxRep::Barycentric;
    *out = mm::prox_average_value(pens->value,
                                  std::span<const double>(x, pens->value.dim()), r, tol_of(tol));
  });
}

mm_status mm_prox_fenchel_residual(const mm_prox_ensemble* pens, const mm_tolerances* tol,
                                   double* residual, double* scale) {
  return guarded([&] {
    require(pens != nullptr, "null pointer");
    const mm::FenchelCheck fc = mm::fenchel_selfdual_check(pens->value, tol_of(tol));
    if (residual) *residual = fc.residual;
    if (scale) *scale = fc.scale;
  });
}

mm_status mm_prox_mu_monotone(const mm_prox_ensemble* pens, double mu_lo, double mu_hi,
                              const double* x, const mm_tolerances* tol, int* ok) {
  return guarded([&] {
    require(pens && x && ok, "null pointer");
    *ok = mm::mu_monotonicity_check(pens->value, mm::MuParam(mu_lo), mm::MuParam(mu_hi),
                                    std::span<const double>(x, pens->value.dim()), tol_of(tol))
              ? 1
              : 0;
  });
}

/* ---- scalar means ---- */

mm_status mm_scalar_means(int count, const double* xs, const double* weights,
                          const mm_tolerances* tol, double* harmonic, double* geometric,
                          double* resolvent, double* arithmetic, mm_mean_order* order) {
  return guarded([&] {
    require(xs && weights, "null pointer");
    require(count >= 1, "count must be >= 1");
    const mm::ScalarTuple t(mm::Vec(xs, xs + count), mm::Vec(weights, weights + count));
    if (harmonic)
      *harmonic = t.all_positive() ? mm::scalar_harmonic_mean(t)
                                   : std::numeric_limits<double>::quiet_NaN();
    if (geometric) *geometric = mm::weighted_geometric_mean(t);
    if (resolvent) *resolvent = mm::scalar_resolvent_mean(t);
    if (arithmetic) *arithmetic = mm::scalar_arithmetic_mean(t);
    if (order)
      *order = static_cast<mm_mean_order>(mm::compare_resolvent_geometric(t, tol_of(tol)));
  });
}

const char* mm_mean_order_name(mm_mean_order order) {
  return mm::to_string(static_cast<mm::MeanOrder>(order));
}

/* ---- property suite ---- */

mm_suite_config mm_suite_config_default(void) {
  mm_suite_config c;
  c.seed = 1;
  c.trials = 1000;
  c.dim_max = 8;
  c.n_max = 4;
  c.cond_max = 100.0;
  c.mu_set = nullptr;
  c.mu_count = 0;
  c.tol = mm_tolerances_default();
  return c;
}

int mm_suite_name_count(void) { return static_cast<int>(mm::check_names().size()); }

const char* mm_suite_name(int index) {
  static const std::vector<std::string> names = mm::check_names();
  if (index < 0 || index >= static_cast<int>(names.size())) return nullptr;
  return names[index].c_str();
}

mm_status mm_suite_run(const mm_suite_config* config, const char* suite_name, mm_report** out) {
  return guarded([&] {
    require(out != nullptr, "null pointer");
    const mm::SuiteConfig cfg = config_of(config);
    *out = new mm_report{mm::run_suite(cfg, suite_name ? suite_name : "all")};
  });
}

void mm_report_free(mm_report* report) { delete report; }

int mm_report_pass(const mm_report* report) { return report && report->value.pass() ? 1 : 0; }

int mm_report_count(const mm_report* report) {
  return report ? static_cast<int>(report->value.records.size()) : 0;
}

mm_status mm_report_record(const mm_report* report, int index, char* name_buf, size_t name_cap,
                           int* trials, int* failures, double* worst_residual,
                           uint64_t* worst_seed_offset) {
  return guarded([&] {
    require(report != nullptr, "null pointer");
    require(index >= 0 && index < static_cast<int>(report->value.records.size()),
            "record index out of range");
    const mm::PropertyRecord& r = report->value.records[index];
    if (name_buf && name_cap > 0) {
      const std::size_t n = std::min(name_cap - 1, r.name.size());
      std::memcpy(name_buf, r.name.data(), n);
      name_buf[n] = '\0';
    }
    if (trials) *trials = r.trials;
    if (failures) *failures = r.failures;
    if (worst_residual) *worst_residual = r.worst_residual;
    if (worst_seed_offset) *worst_seed_offset = r.worst_seed_offset;
  });
}

char* mm_report_to_json(const mm_report* report) {
  if (!report) return nullptr;
  return dup_string(mm::report_to_json(report->value));
}

char* mm_report_to_table(const mm_report* report) {
  if (!report) return nullptr;
  return dup_string(mm::report_to_table(report->value));
}

mm_status mm_report_write_json(const mm_report* report, const char* path) {
  return guarded([&] {
    require(report && path, "null pointer");
    mm::write_file(path, mm::report_to_json(report->value));
  });
}

void mm_string_free(char* s) { delete[] s; }

}  // extern "C"
