// Acceptance suite: runs every release criterion at its pinned tolerance and
// prints one PASS/FAIL line per criterion. Exit status is the number of
// failed criteria.

#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "core/io.hpp"
#include "core/random_instances.hpp"
#include "core/resolvent_calculus.hpp"
#include "core/suite.hpp"

using namespace mm;

namespace {

constexpr std::uint64_t kInstanceSeed = 7750211;
constexpr int kEnsembleCount = 1000;
constexpr int kProxCount = 500;

std::string fail_msg(const char* fmt, ...) {
  char buf[256];
  va_list args;
  va_start(args, fmt);
  std::vsnprintf(buf, sizeof buf, fmt, args);
  va_end(args);
  return buf;
}

std::vector<Ensemble> instance_set() {
  std::vector<Ensemble> out;
  out.reserve(kEnsembleCount);
  for (int t = 0; t < kEnsembleCount; ++t) {
    Rng rng = Rng::substream(kInstanceSeed, 0, t);
    const int dim = rng.uniform_int(1, 8);
    const int n = rng.uniform_int(1, 4);
    out.push_back(random_pd_ensemble(rng, dim, n, 100.0));
  }
  return out;
}

const std::vector<double> kMuSet = {0.01, 1.0, 100.0};

// --- criterion 1: scalar mean values at the fixed witness tuple ---
std::string criterion_scalar_values() {
  const ScalarTuple t({0.0, 1.0}, {0.5, 0.5});
  const double r = scalar_resolvent_mean(t);
  if (std::abs(r - 1.0 / 3.0) > 1e-12)
    return fail_msg("resolvent mean of (0,1) is %.17g, expected 1/3", r);
  const double g = weighted_geometric_mean(t);
  if (g != 0.0) return fail_msg("geometric mean of (0,1) is %.17g, expected exactly 0", g);
  return "";
}

// --- criterion 2: Loewner sandwich over the 1000-instance set ---
std::string criterion_sandwich(const std::vector<Ensemble>& set) {
  for (std::size_t i = 0; i < set.size(); ++i)
    for (double mu : kMuSet) {
      const TrialResult res = check_sandwich(set[i], MuParam(mu));
      if (!res.ok)
        return fail_msg("instance %zu at mu=%g violates the sandwich (residual %.3g)", i, mu,
                        res.residual);
    }
  return "";
}

// --- criterion 3: self-duality with conditioning-scaled tolerance ---
std::string criterion_self_duality(const std::vector<Ensemble>& set) {
  const Tolerances tol;
  for (std::size_t i = 0; i < set.size(); ++i) {
    double kappa_max = 1.0;
    std::vector<SymMatrix> invs;
    for (int k = 0; k < set[i].count(); ++k) {
      const Spectrum sp = eigendecompose(set[i].matrix(k));
      kappa_max = std::max(kappa_max, condition_number(sp));
      invs.push_back(sp.map([](double v) { return 1.0 / v; }));
    }
    const Ensemble dual(invs, set[i].weights());
    for (double mu : kMuSet) {
      const SymMatrix r = resolvent_average(set[i], MuParam(mu));
      const Spectrum sr = eigendecompose(r);
      const double kappa = std::max(kappa_max, condition_number(sr));
      const SymMatrix r_inv = sr.map([](double v) { return 1.0 / v; });
      const SymMatrix r_dual = resolvent_average(dual, MuParam(1.0 / mu), tol);
      const double rel = frobenius_distance(r_inv, r_dual) / (1.0 + r_inv.frobenius_norm());
      if (rel > 1e-8 * (1.0 + kappa))
        return fail_msg("instance %zu at mu=%g: residual %.3g > 1e-8*(1+%.3g)", i, mu, rel,
                        kappa);
    }
  }
  return "";
}

// --- criterion 4: limits at the grid ends with monotone decay ---
std::string criterion_limits(const std::vector<Ensemble>& set) {
  for (std::size_t i = 0; i < set.size(); ++i) {
    const SweepReport rep = mu_sweep(set[i], 1e-6, 1e6, 25);
    const double arith_norm = arithmetic_average(set[i]).frobenius_norm();
    const double harm_norm = harmonic_average(set[i]).frobenius_norm();
    if (rep.dist_arith.front() > 1e-4 * arith_norm)
      return fail_msg("instance %zu: dist to arithmetic at mu=1e-6 is %.3g > 1e-4*%.3g", i,
                      rep.dist_arith.front(), arith_norm);
    if (rep.dist_harm.back() > 1e-4 * harm_norm)
      return fail_msg("instance %zu: dist to harmonic at mu=1e6 is %.3g > 1e-4*%.3g", i,
                      rep.dist_harm.back(), harm_norm);
    // decay comparisons carry an eq-sized slack: on near-constant ensembles
    // every distance on the grid is pure roundoff
    for (std::size_t j = 0; j + 1 < rep.grid.size(); ++j) {
      const double slack_a = 1e-9 * (1.0 + arith_norm);
      const double slack_h = 1e-9 * (1.0 + harm_norm);
      if (rep.dist_arith[j] > rep.dist_arith[j + 1] + slack_a)
        return fail_msg("instance %zu: arithmetic distance grew toward mu=0 at grid step %zu", i,
                        j);
      if (rep.dist_harm[j + 1] > rep.dist_harm[j] + slack_h)
        return fail_msg("instance %zu: harmonic distance grew toward mu=inf at grid step %zu", i,
                        j);
    }
  }
  return "";
}

// --- criterion 5: resolvent and Yosida averaging identities ---
std::string criterion_identities(const std::vector<Ensemble>& set) {
  for (std::size_t i = 0; i < set.size(); ++i)
    for (double mu : kMuSet) {
      const double bound =
          1e-9 * (1.0 + set[i].count()) * std::max(1.0, 1.0 / mu);
      const double r1 = resolvent_identity_residual(set[i], MuParam(mu));
      if (r1 > bound)
        return fail_msg("instance %zu at mu=%g: resolvent identity residual %.3g > %.3g", i, mu,
                        r1, bound);
      const double r2 = yosida_identity_residual(set[i], MuParam(mu));
      if (r2 > bound)
        return fail_msg("instance %zu at mu=%g: yosida identity residual %.3g > %.3g", i, mu, r2,
                        bound);
    }
  return "";
}

// --- criterion 6: closed form vs KKT oracle with gradient cross-check ---
std::string criterion_prox_oracle() {
  const std::vector<double> mus = {0.01, 0.1, 1.0, 10.0, 100.0};
  for (int t = 0; t < kProxCount; ++t) {
    Rng rng = Rng::substream(kInstanceSeed, 1, t);
    const int dim = rng.uniform_int(1, 6);
    const int n = rng.uniform_int(1, 4);
    const double mu = mus[rng.uniform_int(0, 4)];
    const ProxEnsemble pens = random_linquad_ensemble(rng, dim, n, 100.0, mu, false);
    const LinQuad closed = prox_average_closed(pens);
    for (int probe = 0; probe < 5; ++probe) {
      Vec x = random_unit_vec(rng, dim);
      const double scale = rng.uniform(0.0, 2.0);
      for (double& v : x) v *= scale;
      const double vc = closed.eval(x);
      const double vs = prox_average_value(pens, x, ProxRep::Split);
      const double vb = prox_average_value(pens, x, ProxRep::Barycentric);
      if (std::abs(vc - vs) > 1e-8 * (1.0 + std::abs(vc)))
        return fail_msg("instance %d: split oracle off by %.3g", t, std::abs(vc - vs));
      if (std::abs(vc - vb) > 1e-8 * (1.0 + std::abs(vc)))
        return fail_msg("instance %d: barycentric oracle off by %.3g", t, std::abs(vc - vb));
    }
    // gradient of the closed form vs central differences of the oracle
    const Vec x0 = random_unit_vec(rng, dim);
    const Vec grad = closed.gradient(x0);
    const double h = 1e-5;
    for (int k = 0; k < dim; ++k) {
      Vec hi = x0, lo = x0;
      hi[k] += h;
      lo[k] -= h;
      const double fd = (prox_average_value(pens, hi, ProxRep::Split) -
                         prox_average_value(pens, lo, ProxRep::Split)) /
                        (2.0 * h);
      if (std::abs(fd - grad[k]) > 1e-6 * (1.0 + norm2(grad)))
        return fail_msg("instance %d: gradient component %d off by %.3g", t, k,
                        std::abs(fd - grad[k]));
    }
  }
  return "";
}

// --- criterion 7: conjugate duality of the proximal average ---
std::string criterion_fenchel() {
  const std::vector<double> mus = {0.01, 0.1, 1.0, 10.0, 100.0};
  for (int t = 0; t < kProxCount; ++t) {
    Rng rng = Rng::substream(kInstanceSeed, 2, t);
    const int dim = rng.uniform_int(1, 6);
    const int n = rng.uniform_int(1, 4);
    const ProxEnsemble pens =
        random_linquad_ensemble(rng, dim, n, 100.0, mus[rng.uniform_int(0, 4)], true);
    const FenchelCheck fc = fenchel_selfdual_check(pens);
    if (fc.residual > 1e-8 * fc.scale)
      return fail_msg("instance %d: coefficient residual %.3g > 1e-8*%.3g", t, fc.residual,
                      fc.scale);
  }
  return "";
}

// --- criterion 8: function-value sandwich and mu monotonicity ---
std::string criterion_function_bounds() {
  for (int t = 0; t < 1000; ++t) {
    Rng rng = Rng::substream(kInstanceSeed, 3, t);
    const int dim = rng.uniform_int(1, 6);
    const int n = rng.uniform_int(1, 4);
    const ProxEnsemble pens =
        random_linquad_ensemble(rng, dim, n, 100.0, rng.log_uniform(0.01, 100.0), true);
    Vec x = random_unit_vec(rng, dim);
    for (double& v : x) v *= rng.uniform(0.0, 2.0);

    std::vector<LinQuad> conj;
    for (const LinQuad& f : pens.funcs()) conj.push_back(conjugate_linquad(f));
    const double left = conjugate_linquad(weighted_sum_linquad(conj, pens.weights())).eval(x);
    const double mid = prox_average_closed(pens).eval(x);
    const double right = weighted_sum_linquad(pens.funcs(), pens.weights()).eval(x);
    const double slack = 1e-9 * (1.0 + std::abs(left) + std::abs(mid) + std::abs(right));
    if (left > mid + slack || mid > right + slack)
      return fail_msg("instance %d: sandwich %.17g <= %.17g <= %.17g violated", t, left, mid,
                      right);

    const double m1 = rng.log_uniform(0.01, 10.0);
    const double m2 = m1 * rng.log_uniform(1.5, 100.0);
    const double v1 = prox_average_closed(pens.with_mu(MuParam(m1))).eval(x);
    const double v2 = prox_average_closed(pens.with_mu(MuParam(m2))).eval(x);
    if (v1 < v2 - 1e-9 * (1.0 + std::abs(v1) + std::abs(v2)))
      return fail_msg("instance %d: value rose from mu=%.3g to mu=%.3g", t, m1, m2);
  }
  return "";
}

// --- criterion 9: scalar mean properties with both comparison witnesses ---
std::string criterion_scalar_suite() {
  const MeanOrder w1 = compare_resolvent_geometric(ScalarTuple({0, 1}, {0.5, 0.5}));
  if (w1 != MeanOrder::RGreater) return "witness (0,1) did not classify as RGreater";
  const MeanOrder w2 = compare_resolvent_geometric(ScalarTuple({9, 1}, {0.5, 0.5}));
  if (w2 != MeanOrder::GGreater) return "witness (9,1) did not classify as GGreater";

  for (int t = 0; t < 1000; ++t) {
    Rng rng = Rng::substream(kInstanceSeed, 4, t);
    const int n = rng.uniform_int(1, 6);
    const ScalarTuple tup = random_positive_tuple(rng, n);
    const double h = scalar_harmonic_mean(tup);
    const double g = weighted_geometric_mean(tup);
    const double r = scalar_resolvent_mean(tup);
    const double a = scalar_arithmetic_mean(tup);
    const double slack = 1e-9 * (1.0 + a);
    if (h > r + slack || r > a + slack)
      return fail_msg("instance %d: H <= R <= A violated", t);
    if (h > g + slack || g > a + slack)
      return fail_msg("instance %d: H <= G <= A violated", t);

    double spread = 0.0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) spread = std::max(spread, tup.x(i) - tup.x(j));
    if (spread / (1.0 + a) > 1e-3 && !(a - r > 0.0 && a - g > 0.0))
      return fail_msg("instance %d: equality held on a spread tuple", t);
    const ScalarTuple constant(Vec(n, tup.x(0)), tup.weights());
    if (std::abs(scalar_resolvent_mean(constant) - scalar_arithmetic_mean(constant)) > slack ||
        std::abs(weighted_geometric_mean(constant) - scalar_arithmetic_mean(constant)) > slack)
      return fail_msg("instance %d: constant tuple broke the equality case", t);

    Vec inv(n);
    for (int i = 0; i < n; ++i) inv[i] = 1.0 / tup.x(i);
    const ScalarTuple tinv(inv, tup.weights());
    if (std::abs(1.0 / r - scalar_resolvent_mean(tinv)) > 1e-9 * (1.0 + 1.0 / r))
      return fail_msg("instance %d: resolvent self-duality violated", t);
    if (std::abs(1.0 / g - weighted_geometric_mean(tinv)) > 1e-9 * (1.0 + 1.0 / g))
      return fail_msg("instance %d: geometric self-duality violated", t);

    // inverse-pair tuples evaluate to one
    const int pairs = rng.uniform_int(1, 3);
    Vec xs;
    for (int i = 0; i < pairs; ++i) {
      const double x = rng.log_uniform(0.01, 100.0);
      xs.push_back(x);
      xs.push_back(1.0 / x);
    }
    const ScalarTuple paired(xs, Vec(2 * pairs, 0.5 / pairs));
    if (std::abs(scalar_resolvent_mean(paired) - 1.0) > 1e-7 ||
        std::abs(weighted_geometric_mean(paired) - 1.0) > 1e-7)
      return fail_msg("instance %d: inverse-pair tuple did not average to 1", t);

    // monotonicity and midpoint concavity for both means
    Vec lo(n), hi(n), ya(n), yb(n), mid(n);
    for (int i = 0; i < n; ++i) {
      lo[i] = rng.log_uniform(0.01, 100.0);
      hi[i] = lo[i] + rng.log_uniform(0.001, 10.0);
      ya[i] = rng.log_uniform(0.01, 100.0);
      yb[i] = rng.log_uniform(0.01, 100.0);
      mid[i] = 0.5 * (ya[i] + yb[i]);
    }
    const Vec w = random_weights(rng, n);
    const ScalarTuple tl(lo, w), th(hi, w), ta(ya, w), tb(yb, w), tm(mid, w);
    if (scalar_resolvent_mean(th) < scalar_resolvent_mean(tl) - 1e-9 ||
        weighted_geometric_mean(th) < weighted_geometric_mean(tl) - 1e-9)
      return fail_msg("instance %d: componentwise monotonicity violated", t);
    if (scalar_resolvent_mean(tm) <
            0.5 * scalar_resolvent_mean(ta) + 0.5 * scalar_resolvent_mean(tb) - 1e-9 ||
        weighted_geometric_mean(tm) <
            0.5 * weighted_geometric_mean(ta) + 0.5 * weighted_geometric_mean(tb) - 1e-9)
      return fail_msg("instance %d: midpoint concavity violated", t);
  }
  return "";
}

// --- criterion 10: recursion consistency on wide ensembles ---
std::string criterion_recursion() {
  for (int t = 0; t < 500; ++t) {
    Rng rng = Rng::substream(kInstanceSeed, 5, t);
    const int dim = rng.uniform_int(1, 8);
    const int n = rng.uniform_int(3, 8);
    const Ensemble ens = random_psd_ensemble(rng, dim, n, 100.0);
    const double mu = rng.log_uniform(0.01, 100.0);
    const SymMatrix direct = resolvent_average(ens, MuParam(mu));
    const SymMatrix folded = resolvent_average_recursive(ens, MuParam(mu));
    const double d = frobenius_distance(direct, folded);
    if (d > 1e-9 * (1.0 + direct.frobenius_norm()))
      return fail_msg("instance %d (n=%d): recursion residual %.3g", t, n, d);
  }
  return "";
}

// --- criterion 11: byte-identical check reports through the CLI ---
std::string criterion_cli_determinism() {
  const char* cli = std::getenv("MM_CLI");
  if (!cli || !cli[0]) return "MM_CLI is not set; cannot invoke the command-line tool";
  const auto dir = std::filesystem::temp_directory_path() / "mm_acceptance";
  std::filesystem::create_directories(dir);
  const std::string out1 = (dir / "det1.json").string();
  const std::string out2 = (dir / "det2.json").string();
  for (const std::string& out : {out1, out2}) {
    const std::string cmd = std::string("'") + cli + "' check --suite all --seed 42 --out '" +
                            out + "' > /dev/null 2>&1";
    const int rc = std::system(cmd.c_str());
    if (rc != 0) return fail_msg("check all --seed 42 exited with status %d", rc);
  }
  std::ifstream f1(out1, std::ios::binary), f2(out2, std::ios::binary);
  std::stringstream s1, s2;
  s1 << f1.rdbuf();
  s2 << f2.rdbuf();
  if (s1.str().empty()) return "first report is empty";
  if (s1.str() != s2.str()) return "reports differ between runs";
  return "";
}

struct Criterion {
  const char* name;
  std::function<std::string()> run;
};

}  // namespace

int main() {
  const std::vector<Ensemble> set = instance_set();

  const std::vector<Criterion> criteria = {
      {"scalar witness values (R=1/3, G=0)", criterion_scalar_values},
      {"Loewner sandwich on 1000 PD ensembles x 3 mu", [&] { return criterion_sandwich(set); }},
      {"self-duality residuals on the instance set", [&] { return criterion_self_duality(set); }},
      {"limit endpoints and monotone decay (25-pt grid)", [&] { return criterion_limits(set); }},
      {"resolvent/yosida averaging identities", [&] { return criterion_identities(set); }},
      {"closed form vs KKT oracle + gradients (500)", criterion_prox_oracle},
      {"conjugate duality of the proximal average (500)", criterion_fenchel},
      {"function sandwich and mu monotonicity (1000)", criterion_function_bounds},
      {"scalar mean suite with both witnesses (1000)", criterion_scalar_suite},
      {"recursion consistency, n in 3..8 (500)", criterion_recursion},
      {"byte-identical CLI check reports (seed 42)", criterion_cli_determinism},
  };

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    std::string err;
    try {
      err = criteria[i].run();
    } catch (const std::exception& e) {
      err = std::string("exception: ") + e.what();
    }
    std::printf("criterion %02zu %-52s %s\n", i + 1, criteria[i].name,
                err.empty() ? "PASS" : "FAIL");
    if (!err.empty()) {
      std::printf("             %s\n", err.c_str());
      ++failures;
    }
    std::fflush(stdout);
  }
  std::printf("acceptance: %zu/%zu criteria passed\n", criteria.size() - failures,
              criteria.size());
  return failures;
}
