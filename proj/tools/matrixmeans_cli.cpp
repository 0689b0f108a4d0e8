// matrixmeans command-line tool. Everything numerical goes through the C API
// in matrixmeans.h; this file only parses flags, moves bytes and maps status
// codes onto the exit taxonomy (0 ok, 2 usage/parse, 3 math precondition,
// 4 property violation).

#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "matrixmeans.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitMath = 3;
constexpr int kExitProperty = 4;

int exit_code_for(mm_status status) {
  switch (status) {
    case MM_OK:
      return kExitOk;
    case MM_ERR_BAD_ARGUMENT:
    case MM_ERR_PARSE:
    case MM_ERR_IO:
    case MM_ERR_UNKNOWN_NAME:
      return kExitUsage;
    default:
      return kExitMath;
  }
}

int report_failure(const char* what, mm_status status) {
  std::fprintf(stderr, "error: %s: %s", what, mm_status_message(status));
  const char* detail = mm_last_error();
  if (detail && detail[0]) std::fprintf(stderr, " (%s)", detail);
  std::fprintf(stderr, "\n");
  return exit_code_for(status);
}

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void print_header(const char* cmd, const std::string& extra, const mm_tolerances& tol) {
  std::printf("# matrixmeans %s%s%s tol-psd=%s tol-eq=%s\n", cmd, extra.empty() ? "" : " ",
              extra.c_str(), fmt(tol.psd).c_str(), fmt(tol.eq).c_str());
}

bool parse_double_list(const std::string& text, std::vector<double>* out) {
  out->clear();
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string::npos) comma = text.size();
    const std::string token = text.substr(pos, comma - pos);
    if (token.empty()) return false;
    char* end = nullptr;
    const double v = std::strtod(token.c_str(), &end);
    if (end == token.c_str() || *end != '\0') return false;
    out->push_back(v);
    pos = comma + 1;
    if (comma == text.size()) break;
  }
  return !out->empty();
}

// --seed flag wins over MATRIXMEANS_SEED; default 1.
int resolve_seed(bool flag_given, std::uint64_t flag_value, std::uint64_t* out) {
  if (flag_given) {
    *out = flag_value;
    return kExitOk;
  }
  const char* env = std::getenv("MATRIXMEANS_SEED");
  if (!env || !env[0]) {
    *out = 1;
    return kExitOk;
  }
  char* end = nullptr;
  const unsigned long long v = std::strtoull(env, &end, 10);
  if (end == env || *end != '\0') {
    std::fprintf(stderr, "error: MATRIXMEANS_SEED is not an integer: %s\n", env);
    return kExitUsage;
  }
  *out = v;
  return kExitOk;
}

struct MatrixGuard {
  mm_matrix* m = nullptr;
  ~MatrixGuard() { mm_matrix_free(m); }
};
struct EnsembleGuard {
  mm_ensemble* e = nullptr;
  ~EnsembleGuard() { mm_ensemble_free(e); }
};
struct LinQuadGuard {
  mm_linquad* f = nullptr;
  ~LinQuadGuard() { mm_linquad_free(f); }
};
struct ProxGuard {
  mm_prox_ensemble* p = nullptr;
  ~ProxGuard() { mm_prox_ensemble_free(p); }
};
struct SweepGuard {
  mm_sweep* s = nullptr;
  ~SweepGuard() { mm_sweep_free(s); }
};
struct ReportGuard {
  mm_report* r = nullptr;
  ~ReportGuard() { mm_report_free(r); }
};

int run_avg(const std::string& kind, const std::string& input, double mu, bool mu_given,
            const std::string& out_path, const mm_tolerances& tol) {
  EnsembleGuard ens;
  mm_status st = mm_ensemble_read_json(input.c_str(), &tol, &ens.e);
  if (st != MM_OK) return report_failure("reading ensemble", st);

  double file_mu = 1.0;
  if (!mu_given) {
    st = mm_ensemble_file_mu(input.c_str(), &file_mu);
    if (st != MM_OK) return report_failure("reading ensemble mu", st);
    mu = file_mu;
  }

  MatrixGuard result;
  if (kind == "resolvent") {
    if (!(mu > 0.0)) {
      std::fprintf(stderr, "error: resolvent average needs mu > 0\n");
      return kExitUsage;
    }
    st = mm_resolvent_average(ens.e, mu, &tol, &result.m);
  } else if (kind == "harmonic") {
    st = mm_harmonic_average(ens.e, &tol, &result.m);
  } else if (kind == "arithmetic") {
    st = mm_arithmetic_average(ens.e, &result.m);
  } else if (kind == "geometric2") {
    if (mm_ensemble_count(ens.e) != 2) {
      std::fprintf(stderr, "error: geometric2 needs an ensemble of exactly 2 matrices\n");
      return kExitUsage;
    }
    MatrixGuard a, b;
    st = mm_ensemble_matrix(ens.e, 0, &a.m);
    if (st == MM_OK) st = mm_ensemble_matrix(ens.e, 1, &b.m);
    if (st == MM_OK) st = mm_geometric_mean2(a.m, b.m, &tol, &result.m);
  } else {
    std::fprintf(stderr, "error: unknown average kind: %s\n", kind.c_str());
    return kExitUsage;
  }
  if (st != MM_OK) return report_failure("computing average", st);

  st = mm_matrix_write_text(result.m, out_path.c_str());
  if (st != MM_OK) return report_failure("writing result", st);

  double lmin = 0, lmax = 0, fro = 0;
  st = mm_matrix_stats(result.m, &tol, &lmin, &lmax, &fro);
  if (st != MM_OK) return report_failure("computing stats", st);

  print_header("avg", "kind=" + kind + " mu=" + fmt(mu), tol);
  std::printf("lambda_min=%s\n", fmt(lmin).c_str());
  std::printf("lambda_max=%s\n", fmt(lmax).c_str());
  std::printf("fro_norm=%s\n", fmt(fro).c_str());
  std::printf("wrote=%s\n", out_path.c_str());
  return kExitOk;
}

int run_sweep(const std::string& input, double mu_lo, double mu_hi, int points,
              const std::string& out_path, const mm_tolerances& tol) {
  EnsembleGuard ens;
  mm_status st = mm_ensemble_read_json(input.c_str(), &tol, &ens.e);
  if (st != MM_OK) return report_failure("reading ensemble", st);

  SweepGuard sweep;
  st = mm_sweep_run(ens.e, mu_lo, mu_hi, points, &tol, &sweep.s);
  if (st != MM_OK) return report_failure("running sweep", st);

  st = mm_sweep_write_csv(sweep.s, out_path.c_str());
  if (st != MM_OK) return report_failure("writing csv", st);

  print_header("sweep",
               "mu-lo=" + fmt(mu_lo) + " mu-hi=" + fmt(mu_hi) + " points=" + std::to_string(points),
               tol);
  std::printf("wrote=%s\n", out_path.c_str());
  if (!mm_sweep_chain_all_ok(sweep.s)) {
    std::fprintf(stderr, "error: Loewner chain violated along the sweep grid\n");
    return kExitProperty;
  }
  return kExitOk;
}

int run_check(const std::string& suite, std::uint64_t seed, int trials, int dim_max, int n_max,
              double cond_max, const std::string& out_path, const mm_tolerances& tol) {
  mm_suite_config cfg = mm_suite_config_default();
  cfg.seed = seed;
  cfg.trials = trials;
  cfg.dim_max = dim_max;
  cfg.n_max = n_max;
  cfg.cond_max = cond_max;
  cfg.tol = tol;

  ReportGuard report;
  const mm_status st = mm_suite_run(&cfg, suite.c_str(), &report.r);
  if (st != MM_OK) return report_failure("running checks", st);

  char* table = mm_report_to_table(report.r);
  if (table) {
    std::fputs(table, stdout);
    mm_string_free(table);
  }
  if (!out_path.empty()) {
    const mm_status wst = mm_report_write_json(report.r, out_path.c_str());
    if (wst != MM_OK) return report_failure("writing report", wst);
    std::printf("wrote=%s\n", out_path.c_str());
  }
  return mm_report_pass(report.r) ? kExitOk : kExitProperty;
}

int run_prox(const std::string& input, const std::string& x_text, const std::string& out_path,
             const mm_tolerances& tol) {
  ProxGuard pens;
  mm_status st = mm_prox_ensemble_read_json(input.c_str(), &tol, &pens.p);
  if (st != MM_OK) return report_failure("reading prox ensemble", st);

  std::vector<double> x;
  if (!parse_double_list(x_text, &x)) {
    std::fprintf(stderr, "error: --x must be a comma-separated list of numbers\n");
    return kExitUsage;
  }
  const int dim = mm_prox_ensemble_dim(pens.p);
  if (static_cast<int>(x.size()) != dim) {
    std::fprintf(stderr, "error: --x needs exactly %d entries\n", dim);
    return kExitUsage;
  }

  LinQuadGuard closed;
  st = mm_prox_average_closed(pens.p, &tol, &closed.f);
  if (st != MM_OK) return report_failure("computing closed form", st);

  double value_closed = 0;
  st = mm_linquad_eval(closed.f, x.data(), &value_closed);
  if (st != MM_OK) return report_failure("evaluating closed form", st);

  double value_oracle = 0;
  st = mm_prox_average_value(pens.p, x.data(), MM_PROX_REP_SPLIT, &tol, &value_oracle);
  if (st != MM_OK) return report_failure("evaluating oracle", st);

  std::vector<double> quad(static_cast<std::size_t>(dim) * dim);
  std::vector<double> linear(dim);
  double constant = 0;
  st = mm_linquad_coefficients(closed.f, quad.data(), linear.data(), &constant);
  if (st != MM_OK) return report_failure("reading coefficients", st);

  print_header("prox", "mu=" + fmt(mm_prox_ensemble_mu(pens.p)), tol);
  std::printf("dim=%d n=%d\n", dim, mm_prox_ensemble_count(pens.p));
  std::printf("quadratic:\n");
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j)
      std::printf("%s%s", j ? " " : "", fmt(quad[static_cast<std::size_t>(i) * dim + j]).c_str());
    std::printf("\n");
  }
  std::printf("linear:");
  for (int i = 0; i < dim; ++i) std::printf(" %s", fmt(linear[i]).c_str());
  std::printf("\n");
  std::printf("constant=%s\n", fmt(constant).c_str());
  std::printf("value_closed=%s\n", fmt(value_closed).c_str());
  std::printf("value_oracle_split=%s\n", fmt(value_oracle).c_str());
  std::printf("difference=%s\n", fmt(value_closed - value_oracle).c_str());

  if (!out_path.empty()) {
    st = mm_linquad_write_json(closed.f, out_path.c_str());
    if (st != MM_OK) return report_failure("writing closed form", st);
    std::printf("wrote=%s\n", out_path.c_str());
  }
  return kExitOk;
}

int run_scalar(const std::string& xs_text, const std::string& weights_text,
               const mm_tolerances& tol) {
  std::vector<double> xs, weights;
  if (!parse_double_list(xs_text, &xs) || !parse_double_list(weights_text, &weights) ||
      xs.size() != weights.size()) {
    std::fprintf(stderr, "error: --xs and --weights must be equal-length numeric lists\n");
    return kExitUsage;
  }
  double h = 0, g = 0, r = 0, a = 0;
  mm_mean_order order = MM_MEAN_EQUAL;
  const mm_status st = mm_scalar_means(static_cast<int>(xs.size()), xs.data(), weights.data(),
                                       &tol, &h, &g, &r, &a, &order);
  if (st != MM_OK) return report_failure("computing scalar means", st);

  print_header("scalar", "", tol);
  const bool h_defined = h == h;  // NaN marks an undefined harmonic mean
  std::printf("%s,%s,%s,%s,%s\n", h_defined ? fmt(h).c_str() : "undef", fmt(g).c_str(),
              fmt(r).c_str(), fmt(a).c_str(), mm_mean_order_name(order));
  return kExitOk;
}

int run_gen(std::uint64_t seed, int dim, int n, double cond, const std::string& out_path,
            const mm_tolerances& tol) {
  EnsembleGuard ens;
  mm_status st = mm_ensemble_random(seed, dim, n, cond, &tol, &ens.e);
  if (st != MM_OK) return report_failure("generating ensemble", st);
  st = mm_ensemble_write_json(ens.e, 1.0, out_path.c_str());
  if (st != MM_OK) return report_failure("writing ensemble", st);
  print_header("gen",
               "seed=" + std::to_string(seed) + " dim=" + std::to_string(dim) +
                   " n=" + std::to_string(n) + " cond=" + fmt(cond),
               tol);
  std::printf("wrote=%s\n", out_path.c_str());
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"resolvent, harmonic, arithmetic and geometric matrix means with a "
               "property-check engine"};
  app.require_subcommand(1);
  app.fallthrough();  // --tol-* may appear after the subcommand

  mm_tolerances tol = mm_tolerances_default();
  app.add_option("--tol-eq", tol.eq, "identity residual tolerance");
  app.add_option("--tol-psd", tol.psd, "Loewner dead-band tolerance");

  auto* avg = app.add_subcommand("avg", "compute a matrix average");
  std::string avg_kind, avg_input, avg_out;
  double avg_mu = 1.0;
  avg->add_option("--kind", avg_kind, "resolvent|harmonic|arithmetic|geometric2")->required();
  avg->add_option("--input", avg_input, "ensemble JSON file")->required();
  auto* avg_mu_opt = avg->add_option("--mu", avg_mu, "averaging parameter (resolvent kind)");
  avg->add_option("--out", avg_out, "output matrix text file")->required();

  auto* sweep = app.add_subcommand("sweep", "sweep mu over a log grid");
  std::string sweep_input, sweep_out;
  double sweep_lo = 1e-6, sweep_hi = 1e6;
  int sweep_points = 25;
  sweep->add_option("--input", sweep_input, "ensemble JSON file")->required();
  sweep->add_option("--mu-lo", sweep_lo, "grid lower end (default 1e-6)");
  sweep->add_option("--mu-hi", sweep_hi, "grid upper end (default 1e6)");
  sweep->add_option("--points", sweep_points, "grid size (default 25)");
  sweep->add_option("--out", sweep_out, "output CSV file")->required();

  auto* check = app.add_subcommand("check", "run property suites");
  std::string check_suite = "all", check_out;
  std::uint64_t check_seed = 0;
  int check_trials = 1000, check_dim_max = 8, check_n_max = 4;
  double check_cond_max = 100.0;
  check->add_option("--suite", check_suite, "suite name or \"all\"");
  auto* check_seed_opt = check->add_option("--seed", check_seed, "base seed");
  check->add_option("--trials", check_trials, "trials per property (default 1000)");
  check->add_option("--dim-max", check_dim_max, "max matrix dimension (default 8)");
  check->add_option("--n-max", check_n_max, "max ensemble size (default 4)");
  check->add_option("--cond-max", check_cond_max, "max condition number (default 100)");
  check->add_option("--out", check_out, "output JSON report");

  auto* prox = app.add_subcommand("prox", "closed-form proximal average and its oracle");
  std::string prox_input, prox_x, prox_out;
  prox->add_option("--input", prox_input, "prox ensemble JSON file")->required();
  prox->add_option("--x", prox_x, "comma-separated evaluation point")->required();
  prox->add_option("--out", prox_out, "optional output JSON for the closed form");

  auto* scalar = app.add_subcommand("scalar", "scalar means of a nonnegative tuple");
  std::string scalar_xs, scalar_weights;
  scalar->add_option("--xs", scalar_xs, "comma-separated nonnegative values")->required();
  scalar->add_option("--weights", scalar_weights, "comma-separated positive weights")->required();

  auto* gen = app.add_subcommand("gen", "generate a reproducible random PD ensemble");
  std::uint64_t gen_seed = 0;
  int gen_dim = 4, gen_n = 3;
  double gen_cond = 10.0;
  std::string gen_out;
  auto* gen_seed_opt = gen->add_option("--seed", gen_seed, "generator seed");
  gen->add_option("--dim", gen_dim, "matrix dimension (default 4)");
  gen->add_option("--n", gen_n, "ensemble size (default 3)");
  gen->add_option("--cond", gen_cond, "condition target (default 10)");
  gen->add_option("--out", gen_out, "output ensemble JSON")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitUsage;
  }

  if (!(tol.psd > 0.0 && tol.eq > 0.0 && tol.psd <= tol.eq)) {
    std::fprintf(stderr, "error: tolerances must satisfy 0 < tol-psd <= tol-eq\n");
    return kExitUsage;
  }

  if (avg->parsed())
    return run_avg(avg_kind, avg_input, avg_mu, avg_mu_opt->count() > 0, avg_out, tol);
  if (sweep->parsed()) return run_sweep(sweep_input, sweep_lo, sweep_hi, sweep_points, sweep_out, tol);
  if (check->parsed()) {
    std::uint64_t seed = 1;
    const int rc = resolve_seed(check_seed_opt->count() > 0, check_seed, &seed);
    if (rc != kExitOk) return rc;
    return run_check(check_suite, seed, check_trials, check_dim_max, check_n_max, check_cond_max,
                     check_out, tol);
  }
  if (prox->parsed()) return run_prox(prox_input, prox_x, prox_out, tol);
  if (scalar->parsed()) return run_scalar(scalar_xs, scalar_weights, tol);
  if (gen->parsed()) {
    std::uint64_t seed = 1;
    const int rc = resolve_seed(gen_seed_opt->count() > 0, gen_seed, &seed);
    if (rc != kExitOk) return rc;
    return run_gen(seed, gen_dim, gen_n, gen_cond, gen_out, tol);
  }
  return kExitUsage;
}
