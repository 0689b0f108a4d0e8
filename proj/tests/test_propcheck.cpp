#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "core/io.hpp"
#include "core/suite.hpp"

using namespace mm;

namespace {

Ensemble scalar_ensemble(std::vector<double> xs, Vec weights) {
  std::vector<SymMatrix> mats;
  for (double v : xs) mats.push_back(SymMatrix::diagonal(std::vector<double>{v}));
  return Ensemble(std::move(mats), std::move(weights));
}

SuiteConfig small_config(std::uint64_t seed, int trials) {
  SuiteConfig cfg;
  cfg.seed = seed;
  cfg.trials = trials;
  return cfg;
}

}  // namespace

TEST_CASE("registry holds one named check per verified statement") {
  const std::vector<std::string> expected = {
      "resolvent-identity",
      "yosida-identity",
      "inverse-pair-identity",
      "constant-ensemble",
      "loewner-monotonicity",
      "loewner-monotonicity-strict",
      "psd-closure",
      "pd-closure",
      "recursion-consistency",
      "prox-conjugate-duality",
      "function-sandwich",
      "mu-value-monotonicity",
      "prox-closed-vs-kkt",
      "matrix-sandwich",
      "limit-arithmetic",
      "limit-harmonic",
      "sweep-loewner-chain",
      "resolvent-concavity",
      "inverse-convexity",
      "harmonic-concavity",
      "self-duality",
      "harmonic-arithmetic-duality",
      "scalar-hra-inequality",
      "scalar-self-duality",
      "scalar-constant-tuple",
      "scalar-inverse-pair-mean",
      "scalar-resolvent-concavity",
      "scalar-resolvent-monotonicity",
      "scalar-hga-inequality",
      "geometric-self-duality",
      "geometric-constant-tuple",
      "geometric-inverse-pair-mean",
      "geometric-concavity",
      "geometric-monotonicity",
      "mean-noncomparability",
  };
  CHECK(check_names() == expected);
}

TEST_CASE("config validation") {
  SuiteConfig cfg;
  cfg.trials = 0;
  CHECK_THROWS_AS(run_suite(cfg), Error);
  cfg = SuiteConfig{};
  cfg.mu_set = {};
  CHECK_THROWS_AS(run_suite(cfg), Error);
  cfg = SuiteConfig{};
  cfg.mu_set = {0.0};
  CHECK_THROWS_AS(run_suite(cfg), Error);
}

TEST_CASE("unknown suite names are rejected") {
  try {
    run_suite(small_config(1, 2), "no-such-suite");
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::UnknownName);
  }
}

TEST_CASE("suite filter runs exactly one record") {
  const CheckReport rep = run_suite(small_config(3, 5), "self-duality");
  REQUIRE(rep.records.size() == 1);
  CHECK(rep.records[0].name == "self-duality");
  CHECK(rep.records[0].trials == 5);
  CHECK(rep.records[0].failures == 0);
}

TEST_CASE("identical configs give identical report bytes") {
  const CheckReport a = run_suite(small_config(42, 5));
  const CheckReport b = run_suite(small_config(42, 5));
  CHECK(report_to_json(a) == report_to_json(b));
  const CheckReport c = run_suite(small_config(43, 5));
  CHECK(report_to_json(a) != report_to_json(c));
}

TEST_CASE("failure counters never exceed trials and pass means zero failures") {
  const CheckReport rep = run_suite(small_config(7, 10));
  for (const PropertyRecord& r : rep.records) {
    CHECK(r.trials == 10);
    CHECK(r.failures >= 0);
    CHECK(r.failures <= r.trials);
  }
  CHECK(rep.pass());
}

TEST_CASE("sandwich check on the hand-computed scalar instance") {
  // (1, 3) with equal weights at mu = 1: 1.5 <= 5/3 <= 2
  const Ensemble ens = scalar_ensemble({1, 3}, {0.5, 0.5});
  const TrialResult res = check_sandwich(ens, MuParam(1.0));
  CHECK(res.ok);
  CHECK(res.residual <= 1e-12);
}

TEST_CASE("self-duality check on the hand-computed scalar instance") {
  // R = 5/3 and R of the inverses is 3/5
  const Ensemble ens = scalar_ensemble({1, 3}, {0.5, 0.5});
  const TrialResult res = check_self_duality(ens, MuParam(1.0));
  CHECK(res.ok);
  const SymMatrix r = resolvent_average(ens, MuParam(1.0));
  CHECK(r(0, 0) == doctest::Approx(5.0 / 3).epsilon(1e-14));
  const Ensemble inv = scalar_ensemble({1, 1.0 / 3}, {0.5, 0.5});
  const SymMatrix rd = resolvent_average(inv, MuParam(1.0));
  CHECK(r(0, 0) * rd(0, 0) == doctest::Approx(1.0).epsilon(1e-13));
}

TEST_CASE("dual pair check on the hand-computed scalar instance") {
  // harmonic of (1,3) is 1.5; arithmetic of the inverses is 2/3
  const Ensemble ens = scalar_ensemble({1, 3}, {0.5, 0.5});
  CHECK(check_dual_pair(ens).ok);
  const SymMatrix h = harmonic_average(ens);
  const Ensemble inv = scalar_ensemble({1, 1.0 / 3}, {0.5, 0.5});
  const SymMatrix ad = arithmetic_average(inv);
  CHECK(h(0, 0) * ad(0, 0) == doctest::Approx(1.0).epsilon(1e-13));
}

TEST_CASE("monotonicity check edge cases") {
  const Ensemble ens = scalar_ensemble({1, 3}, {0.5, 0.5});
  // zero perturbation: weak holds, strict cannot
  CHECK(check_monotonicity(ens, ens, false, MuParam(1.0)).ok);
  CHECK_FALSE(check_monotonicity(ens, ens, true, MuParam(1.0)).ok);

  // all-zero base with one PD bump: strictly greater (PD closure route)
  const Ensemble zeros({SymMatrix::zeros(2), SymMatrix::zeros(2)}, {0.5, 0.5});
  const Ensemble bumped({SymMatrix::identity(2), SymMatrix::zeros(2)}, {0.5, 0.5});
  CHECK(check_monotonicity(zeros, bumped, true, MuParam(1.0)).ok);
  CHECK(is_pd(resolvent_average(bumped, MuParam(1.0))));
}

TEST_CASE("concavity checks on hand-computed instances") {
  // identical ensembles: equality in the resolvent probe
  const Ensemble ens = scalar_ensemble({1, 3}, {0.5, 0.5});
  const std::vector<Vec> probes = {Vec{1.0}};
  CHECK(check_concavity_resolvent(ens, ens, MuParam(1.0), 0.5, probes).ok);

  // scalars 1 and 3 at t = 1/2: (2)^-1 = 0.5 <= 1/2 + 1/6 = 2/3
  const SymMatrix a = SymMatrix::diagonal(std::vector<double>{1});
  const SymMatrix b = SymMatrix::diagonal(std::vector<double>{3});
  const TrialResult inv = check_concavity_inverse(a, b, 0.5, probes);
  CHECK(inv.ok);
  const double lhs = inverse(SymMatrix::diagonal(std::vector<double>{2})).quad_form(Vec{1.0});
  const double rhs = 0.5 * inverse(a).quad_form(Vec{1.0}) + 0.5 * inverse(b).quad_form(Vec{1.0});
  CHECK(lhs == doctest::Approx(0.25).epsilon(1e-13));
  CHECK(rhs == doctest::Approx(1.0 / 3).epsilon(1e-13));

  CHECK(check_concavity_harmonic(ScalarTuple({1, 3}, {0.5, 0.5}),
                                 ScalarTuple({2, 5}, {0.5, 0.5}))
            .ok);
}

TEST_CASE("small full-suite run passes") {
  const CheckReport rep = run_suite(small_config(2024, 50));
  CHECK(rep.pass());
  CHECK(rep.records.size() == check_names().size());
}
