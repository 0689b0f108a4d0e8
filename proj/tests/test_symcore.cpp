#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "core/random_instances.hpp"
#include "core/spectral.hpp"

using namespace mm;

namespace {

SymMatrix mat2(double a, double b, double c, double d) {
  return SymMatrix::from_rows({{a, b}, {c, d}});
}

}  // namespace

TEST_CASE("construction symmetrizes and validates") {
  const SymMatrix d = SymMatrix::from_rows({{1, 0}, {0, 2}});
  CHECK(d(0, 0) == 1.0);
  CHECK(d(1, 1) == 2.0);
  CHECK(d(0, 1) == 0.0);

  const SymMatrix x = mat2(0, 1, 1, 0);
  CHECK(x(0, 1) == 1.0);
  CHECK(x(1, 0) == 1.0);

  CHECK_THROWS_AS(SymMatrix::from_rows({{1, 2}, {2.1, 1}}), Error);
  try {
    SymMatrix::from_rows({{1, 2}, {2.1, 1}});
  } catch (const Error& e) {
    CHECK(e.code() == Errc::AsymmetricInput);
  }

  CHECK_THROWS_AS(SymMatrix::from_rows({{1, 2}}), Error);
  const double inf = std::numeric_limits<double>::infinity();
  CHECK_THROWS_AS(SymMatrix::from_rows({{inf, 0}, {0, 1}}), Error);

  // near-symmetric input is averaged, not rejected
  const SymMatrix near = SymMatrix::from_rows({{1.0, 1e-13}, {0.0, 1.0}});
  CHECK(near(0, 1) == near(1, 0));
}

TEST_CASE("eigendecompose on frozen instances") {
  const Spectrum d = eigendecompose(SymMatrix::diagonal(std::vector<double>{3, 1}));
  CHECK(d.eigenvalues[0] == doctest::Approx(1).epsilon(1e-14));
  CHECK(d.eigenvalues[1] == doctest::Approx(3).epsilon(1e-14));
  CHECK(std::abs(d.vec(1, 0)) == doctest::Approx(1).epsilon(1e-12));
  CHECK(std::abs(d.vec(0, 1)) == doctest::Approx(1).epsilon(1e-12));

  // characteristic polynomial of the exchange matrix is l^2 - 1
  const Spectrum x = eigendecompose(mat2(0, 1, 1, 0));
  CHECK(x.eigenvalues[0] == doctest::Approx(-1).epsilon(1e-14));
  CHECK(x.eigenvalues[1] == doctest::Approx(1).epsilon(1e-14));

  const Spectrum id = eigendecompose(SymMatrix::identity(5));
  for (double v : id.eigenvalues) CHECK(v == doctest::Approx(1).epsilon(1e-14));
}

TEST_CASE("definiteness tests with dead-band") {
  CHECK(is_psd(SymMatrix::diagonal(std::vector<double>{0, 1})));
  CHECK_FALSE(is_pd(SymMatrix::diagonal(std::vector<double>{0, 1})));
  CHECK(is_psd(SymMatrix::diagonal(std::vector<double>{1, 2})));
  CHECK(is_pd(SymMatrix::diagonal(std::vector<double>{1, 2})));
  CHECK_FALSE(is_psd(mat2(1, 2, 2, 1)));  // eigenvalues 3 and -1

  // inside the dead-band: PSD but not PD
  const SymMatrix tiny = SymMatrix::diagonal(std::vector<double>{1e-12, 1});
  CHECK(is_psd(tiny));
  CHECK_FALSE(is_pd(tiny));
}

TEST_CASE("loewner comparison on frozen instances") {
  const SymMatrix id = SymMatrix::identity(2);
  CHECK(loewner_cmp(SymMatrix::diagonal(std::vector<double>{2, 2}), id) ==
        LoewnerOrdering::StrictGreater);
  CHECK(loewner_cmp(SymMatrix::diagonal(std::vector<double>{1, 0}),
                    SymMatrix::diagonal(std::vector<double>{0, 1})) ==
        LoewnerOrdering::Incomparable);
  CHECK(loewner_cmp(id, id) == LoewnerOrdering::Equal);
  CHECK(loewner_cmp(SymMatrix::diagonal(std::vector<double>{0, 1}), SymMatrix::zeros(2)) ==
        LoewnerOrdering::GreaterEq);
  CHECK_THROWS_AS(loewner_cmp(id, SymMatrix::identity(3)), Error);
}

TEST_CASE("loewner comparison is antisymmetric on random pairs") {
  Rng rng(2024);
  for (int t = 0; t < 200; ++t) {
    const int dim = rng.uniform_int(1, 6);
    const SymMatrix x = random_spd(rng, dim, 50.0);
    const SymMatrix y = random_spd(rng, dim, 50.0);
    const LoewnerOrdering ab = loewner_cmp(x, y);
    const LoewnerOrdering ba = loewner_cmp(y, x);
    switch (ab) {
      case LoewnerOrdering::StrictGreater: CHECK(ba == LoewnerOrdering::StrictLess); break;
      case LoewnerOrdering::GreaterEq: CHECK(ba == LoewnerOrdering::LessEq); break;
      case LoewnerOrdering::StrictLess: CHECK(ba == LoewnerOrdering::StrictGreater); break;
      case LoewnerOrdering::LessEq: CHECK(ba == LoewnerOrdering::GreaterEq); break;
      case LoewnerOrdering::Equal: CHECK(ba == LoewnerOrdering::Equal); break;
      case LoewnerOrdering::Incomparable: CHECK(ba == LoewnerOrdering::Incomparable); break;
    }
  }
}

TEST_CASE("inverse on frozen instances") {
  const SymMatrix a = inverse(SymMatrix::diagonal(std::vector<double>{2, 4}));
  CHECK(a(0, 0) == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(a(1, 1) == doctest::Approx(0.25).epsilon(1e-14));

  CHECK(frobenius_distance(inverse(SymMatrix::identity(3)), SymMatrix::identity(3)) < 1e-14);

  // 2x2 adjugate: [[2,1],[1,2]]^-1 = (1/3) [[2,-1],[-1,2]]
  const SymMatrix b = inverse(mat2(2, 1, 1, 2));
  CHECK(b(0, 0) == doctest::Approx(2.0 / 3).epsilon(1e-13));
  CHECK(b(0, 1) == doctest::Approx(-1.0 / 3).epsilon(1e-13));

  CHECK_THROWS_AS(inverse(SymMatrix::diagonal(std::vector<double>{0, 1})), Error);
  try {
    inverse(SymMatrix::diagonal(std::vector<double>{0, 1}));
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NotPositiveDefinite);
  }
}

TEST_CASE("sqrt_psd on frozen instances") {
  const SymMatrix a = sqrt_psd(SymMatrix::diagonal(std::vector<double>{4, 9}));
  CHECK(a(0, 0) == doctest::Approx(2).epsilon(1e-14));
  CHECK(a(1, 1) == doctest::Approx(3).epsilon(1e-14));

  CHECK(frobenius_distance(sqrt_psd(SymMatrix::identity(4)), SymMatrix::identity(4)) < 1e-13);

  // eigenbasis (1,1)/(1,-1), eigenvalues 9 and 1 -> roots 3 and 1
  const SymMatrix b = sqrt_psd(mat2(5, 4, 4, 5));
  CHECK(b(0, 0) == doctest::Approx(2).epsilon(1e-12));
  CHECK(b(0, 1) == doctest::Approx(1).epsilon(1e-12));

  CHECK_THROWS_AS(sqrt_psd(mat2(1, 2, 2, 1)), Error);

  // dead-band negatives clamp to zero
  const SymMatrix tiny = SymMatrix::diagonal(std::vector<double>{-1e-12, 1});
  const SymMatrix s = sqrt_psd(tiny);
  CHECK(s(0, 0) == 0.0);
}

TEST_CASE("random_spd contract") {
  CHECK(frobenius_distance(random_spd(7, 3, 1.0), SymMatrix::identity(3)) == 0.0);

  const SymMatrix a = random_spd(42, 4, 100.0);
  const SymMatrix b = random_spd(42, 4, 100.0);
  CHECK(frobenius_distance(a, b) == 0.0);  // bitwise determinism
  const SymMatrix c = random_spd(43, 4, 100.0);
  CHECK(frobenius_distance(a, c) > 0.0);

  const Spectrum sp = eigendecompose(a);
  CHECK(condition_number(sp) <= 100.0 * (1.0 + 1e-9));
  CHECK(sp.lambda_min() > 0.0);
}

TEST_CASE("spectral reconstruction and orthogonality invariants") {
  Rng rng(11);
  const Tolerances tol;
  for (int t = 0; t < 200; ++t) {
    const int dim = rng.uniform_int(1, 8);
    const SymMatrix m = random_psd(rng, dim, 1000.0, rng.uniform_int(0, dim / 2));
    const Spectrum sp = eigendecompose(m);

    const SymMatrix rebuilt = sp.map([](double v) { return v; });
    CHECK(frobenius_distance(rebuilt, m) <= dim * tol.spec * (1.0 + m.frobenius_norm()));

    double qq_err = 0.0;  // ||Q^T Q - Id||_F
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j < dim; ++j) {
        double s = 0.0;
        for (int k = 0; k < dim; ++k) s += sp.vec(k, i) * sp.vec(k, j);
        const double d = s - (i == j ? 1.0 : 0.0);
        qq_err += d * d;
      }
    CHECK(std::sqrt(qq_err) <= dim * tol.spec);
  }
}

TEST_CASE("inverse is an involution on random SPD") {
  Rng rng(12);
  const Tolerances tol;
  for (int t = 0; t < 300; ++t) {
    const int dim = rng.uniform_int(1, 8);
    const SymMatrix m = random_spd(rng, dim, 1e4);
    const double kappa = condition_number(eigendecompose(m));
    const SymMatrix back = inverse(inverse(m));
    CHECK(frobenius_distance(back, m) <= tol.eq * kappa * (1.0 + m.frobenius_norm()));
  }
}

TEST_CASE("product of matrix and its inverse is the identity") {
  Rng rng(13);
  const Tolerances tol;
  for (int t = 0; t < 100; ++t) {
    const int dim = rng.uniform_int(1, 8);
    const SymMatrix m = random_spd(rng, dim, 1e4);
    const double kappa = condition_number(eigendecompose(m));
    const SymMatrix prod = symmetrized_product(m, inverse(m));
    CHECK(frobenius_distance(prod, SymMatrix::identity(dim)) <= tol.eq * kappa);
  }
}

TEST_CASE("square of sqrt_psd reproduces the input on 1000 seeded instances") {
  Rng rng(14);
  const Tolerances tol;
  for (int t = 0; t < 1000; ++t) {
    const int dim = rng.uniform_int(1, 8);
    const SymMatrix m = random_psd(rng, dim, 100.0, rng.uniform_int(0, dim / 2));
    const SymMatrix s = sqrt_psd(m);
    CHECK(is_psd(s));
    const SymMatrix sq = symmetrized_product(s, s);
    CHECK(frobenius_distance(sq, m) <= tol.eq * (1.0 + m.frobenius_norm()));
  }
}

TEST_CASE("inversion reverses the Loewner order on ordered SPD pairs") {
  Rng rng(15);
  for (int t = 0; t < 200; ++t) {
    const int dim = rng.uniform_int(1, 6);
    const SymMatrix b = random_spd(rng, dim, 100.0);
    SymMatrix a = b;
    if (rng.uniform() < 0.7) a.add_scaled(random_psd(rng, dim, 10.0, rng.uniform_int(0, dim - 1)), 0.5);
    const LoewnerOrdering cmp = loewner_cmp(inverse(b), inverse(a));
    CHECK(loewner_at_least(cmp));
  }
}
