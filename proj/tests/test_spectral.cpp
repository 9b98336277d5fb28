#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "meannorm/families.hpp"
#include "meannorm/matrix.hpp"
#include "meannorm/rng.hpp"
#include "meannorm/spectral.hpp"
#include "meannorm/weights.hpp"

using namespace meannorm;

namespace {

/// Closed-form eigenvalues of [[a, b], [b, c]], ascending.
std::pair<double, double> eig2x2(double a, double b, double c) {
  const double mean = 0.5 * (a + c);
  const double disc = std::sqrt(0.25 * (a - c) * (a - c) + b * b);
  return {mean - disc, mean + disc};
}

DenseSymMatrix diag(const std::vector<double>& d) {
  DenseSymMatrix a(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) a.set(i, i, d[i]);
  return a;
}

DenseSymMatrix random_sym(TrialRng& rng, std::size_t n) {
  DenseSymMatrix a(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j <= i; ++j) a.set(i, j, rng.next_double());
  return a;
}

DenseMatrix random_dense(TrialRng& rng, std::size_t rows, std::size_t cols) {
  DenseMatrix a(rows, cols);
  for (double& v : a.data()) v = rng.next_double();
  return a;
}

}  // namespace

TEST_CASE("spectral_norm_sym basics") {
  DenseSymMatrix id(3);
  for (std::size_t i = 0; i < 3; ++i) id.set(i, i, 1.0);
  const NormEstimate e1 = spectral_norm_sym(id);
  CHECK(e1.converged);
  CHECK(e1.value == doctest::Approx(1.0).epsilon(1e-12));

  DenseSymMatrix g(2);
  g.set(0, 0, 1.25);
  g.set(1, 0, 0.25);
  g.set(1, 1, 0.25);
  const auto [lo, hi] = eig2x2(1.25, 0.25, 0.25);
  CHECK(hi == doctest::Approx(1.3090169943749475).epsilon(1e-14));
  const NormEstimate e2 = spectral_norm_sym(g);
  CHECK(e2.converged);
  CHECK(e2.value == doctest::Approx(hi).epsilon(1e-11));
  CHECK(lo == doctest::Approx((1.5 - std::sqrt(1.25)) / 2.0).epsilon(1e-14));

  const NormEstimate e3 = spectral_norm_sym(diag({1.0, 2.0, 3.0}));
  CHECK(e3.converged);
  CHECK(e3.value == doctest::Approx(3.0).epsilon(1e-12));
}

TEST_CASE("spectral_norm_sym reports the dominant magnitude") {
  const NormEstimate e = spectral_norm_sym(diag({-5.0, 1.0, 2.0}));
  CHECK(e.converged);
  CHECK(e.value == doctest::Approx(5.0).epsilon(1e-11));
}

TEST_CASE("eig_sym_all oracle basics") {
  const auto d = eig_sym_all(diag({3.0, 1.0, 2.0}));
  CHECK(d[0] == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(d[1] == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(d[2] == doctest::Approx(3.0).epsilon(1e-14));

  DenseSymMatrix g(2);
  g.set(0, 0, 1.25);
  g.set(1, 0, 0.25);
  g.set(1, 1, 0.25);
  const auto e = eig_sym_all(g);
  const auto [lo, hi] = eig2x2(1.25, 0.25, 0.25);
  CHECK(e[0] == doctest::Approx(lo).epsilon(1e-13));
  CHECK(e[1] == doctest::Approx(hi).epsilon(1e-13));

  DenseSymMatrix ones4(4);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j <= i; ++j) ones4.set(i, j, 1.0);
  const auto r1 = eig_sym_all(ones4);
  CHECK(std::abs(r1[0]) < 1e-13);
  CHECK(std::abs(r1[2]) < 1e-13);
  CHECK(r1[3] == doctest::Approx(4.0).epsilon(1e-13));

  CHECK_THROWS_AS(eig_sym_all(DenseSymMatrix(2049)), std::invalid_argument);
}

TEST_CASE("eig_sym_all trace identity on random matrices") {
  TrialRng rng(100);
  for (std::size_t n : {5u, 24u, 63u}) {
    const DenseSymMatrix a = random_sym(rng, n);
    const auto eig = eig_sym_all(a);
    double trace = 0.0, sum = 0.0;
    for (std::size_t i = 0; i < n; ++i) trace += a(i, i);
    for (double v : eig) sum += v;
    CHECK(std::abs(sum - trace) < 1e-10 * static_cast<double>(n));
  }
}

TEST_CASE("power iteration agrees with the Jacobi oracle") {
  TrialRng rng(2024);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 2 + rng.next_u64() % 63;  // n <= 64
    const DenseSymMatrix a = random_sym(rng, n);
    const NormEstimate est = spectral_norm_sym(a);
    const auto eig = eig_sym_all(a);
    const double want = std::max(std::abs(eig.front()), std::abs(eig.back()));
    REQUIRE(est.converged);
    CHECK(std::abs(est.value - want) < 1e-9 * std::max(1.0, want));
  }
}

TEST_CASE("operator_norm_2 basics and duality") {
  DenseMatrix id(3, 3);
  for (std::size_t i = 0; i < 3; ++i) id(i, i) = 1.0;
  CHECK(operator_norm_2(id).value == doctest::Approx(1.0).epsilon(1e-12));

  const DenseMatrix cesaro = weighted_mean_matrix(WeightSequence::ones(2), 2);
  const NormEstimate e = operator_norm_2(cesaro);
  CHECK(e.converged);
  CHECK(e.value == doctest::Approx(std::sqrt(1.3090169943749475)).epsilon(1e-11));

  DenseMatrix d(4, 4);
  d(0, 0) = 0.5;
  d(1, 1) = -2.5;
  d(2, 2) = 1.0;
  d(3, 3) = 2.0;
  CHECK(operator_norm_2(d).value == doctest::Approx(2.5).epsilon(1e-11));

  TrialRng rng(77);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 2 + rng.next_u64() % 40;
    const DenseMatrix b = random_dense(rng, n, n);
    const double lhs = operator_norm_2(b).value;
    const double rhs = operator_norm_2(transpose(b)).value;
    CHECK(std::abs(lhs - rhs) < 1e-10 * std::max(1.0, lhs));
  }
}

TEST_CASE("operator_norm_2 handles rectangular input") {
  TrialRng rng(13);
  const DenseMatrix b = random_dense(rng, 7, 3);
  const double direct = operator_norm_2(b).value;
  const double dual = operator_norm_2(transpose(b)).value;
  CHECK(direct == doctest::Approx(dual).epsilon(1e-10));
  const double via_gram = std::sqrt(eig_sym_all(gram(b)).back());
  CHECK(direct == doctest::Approx(via_gram).epsilon(1e-10));
}

TEST_CASE("max_singular_value") {
  CHECK(max_singular_value(DenseMatrix(3, 3)).value == 0.0);

  DenseMatrix rot(2, 2);
  rot(0, 1) = 1.0;
  rot(1, 0) = -1.0;
  CHECK(max_singular_value(rot).value == doctest::Approx(1.0).epsilon(1e-12));

  // Gram consistency: sigma_max^2 equals the top eigenvalue of K^t K
  TrialRng rng(55);
  const DenseMatrix k = random_dense(rng, 12, 12);
  const double sigma = max_singular_value(k).value;
  const double top = spectral_norm_sym(gram(k)).value;
  CHECK(sigma * sigma == doctest::Approx(top).epsilon(1e-9));
}

TEST_CASE("operator_norm_p matches operator_norm_2 at p = 2") {
  const DenseMatrix b = weighted_mean_matrix(WeightSequence::ones(16), 16);
  const double p2 = operator_norm_p(b, 2.0).value;
  const double direct = operator_norm_2(b).value;
  CHECK(std::abs(p2 - direct) < 1e-9);
}

TEST_CASE("operator_norm_p on diagonal matrices") {
  DenseMatrix d(3, 3);
  d(0, 0) = 0.3;
  d(1, 1) = 4.0;
  d(2, 2) = 1.0;
  for (double p : {1.5, 2.0, 3.0, 7.0}) {
    const NormEstimate e = operator_norm_p(d, p);
    CHECK(e.converged);
    CHECK(e.value == doctest::Approx(4.0).epsilon(1e-10));
  }
}

TEST_CASE("operator_norm_p stays below the Hardy constant on the Cesaro matrix") {
  const DenseMatrix b = weighted_mean_matrix(WeightSequence::ones(1024), 1024);
  const double p = 1.5;
  const NormEstimate e = operator_norm_p(b, p);
  CHECK(e.converged);
  CHECK(e.value < p / (p - 1.0));
  // truncation converges slowly at small p; reference value 2.3613311534
  CHECK(e.value == doctest::Approx(2.3613311534).epsilon(1e-9));
}

TEST_CASE("operator_norm_p estimates grow monotonically") {
  // nondecreasing value sequence of the dual-exponent iteration
  const DenseMatrix b = weighted_mean_matrix(WeightSequence::ones(64), 64);
  double prev = 0.0;
  for (std::uint64_t iters : {1ull, 2ull, 4ull, 8ull, 32ull}) {
    IterationConfig cfg;
    cfg.max_iterations = iters;
    const double v = operator_norm_p(b, 2.5, cfg).value;
    CHECK(v >= prev - 1e-13);
    prev = v;
  }
}

TEST_CASE("operator_norm_p rejects bad input") {
  DenseMatrix neg(2, 2);
  neg(0, 0) = -1.0;
  CHECK_THROWS_AS(operator_norm_p(neg, 2.0), std::domain_error);
  DenseMatrix ok(2, 2);
  CHECK_THROWS_AS(operator_norm_p(ok, 1.0), std::domain_error);
  CHECK_THROWS_AS(operator_norm_p(ok, 0.5), std::domain_error);
}

TEST_CASE("is_positive_semidefinite") {
  DenseSymMatrix id(2);
  id.set(0, 0, 1.0);
  id.set(1, 1, 1.0);
  const auto v1 = is_positive_semidefinite(id, 1e-10);
  CHECK(v1.positive_semidefinite);
  CHECK(v1.min_eigenvalue == doctest::Approx(1.0).epsilon(1e-13));

  const auto v2 = is_positive_semidefinite(diag({1.0, -1.0}), 1e-10);
  CHECK_FALSE(v2.positive_semidefinite);
  CHECK(v2.min_eigenvalue == doctest::Approx(-1.0).epsilon(1e-13));

  const SpacedSequence s({1.0, 2.0, 3.0, 5.0, 8.0});
  const auto v3 = is_positive_semidefinite(schur_x_matrix(s, 3.0), 1e-10);
  CHECK(v3.positive_semidefinite);
}

TEST_CASE("monotone truncation of the Cesaro gram norm") {
  double prev = 0.0;
  for (std::size_t n = 2; n <= 512; n *= 2) {
    const double v = spectral_norm_sym(gram_beta(WeightSequence::ones(n), n)).value;
    CHECK(v > prev);
    CHECK(v < 4.0);
    prev = v;
  }
}

TEST_CASE("Schur product norm bound with a PSD multiplier") {
  TrialRng rng(321);
  std::vector<double> vals;
  double acc = 0.5;
  for (int i = 0; i < 12; ++i) {
    acc += 0.3 + rng.next_double();
    vals.push_back(acc);
  }
  const SpacedSequence s(vals);
  for (double alpha : {1.0, 2.0, 3.5}) {
    const DenseSymMatrix x = schur_x_matrix(s, alpha);
    double max_diag = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) max_diag = std::max(max_diag, x(i, i));

    DenseMatrix y(12, 12);
    for (std::size_t i = 0; i < 12; ++i)
      for (std::size_t j = 0; j <= i; ++j) {
        const double v = rng.next_double() - 0.25;
        y(i, j) = v;
        y(j, i) = v;
      }
    const double prod_norm = operator_norm_2(hadamard_product(x.to_dense(), y)).value;
    const double y_norm = operator_norm_2(y).value;
    CHECK(prod_norm <= max_diag * y_norm + 1e-10);
  }
}
