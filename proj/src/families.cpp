#include "meannorm/families.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "meannorm/kahan.hpp"
#include "meannorm/means.hpp"

namespace meannorm {

namespace {

double ipow(std::size_t k, double e) { return std::pow(static_cast<double>(k), e); }

/// Tail sums T_m = sum_{k=m}^{N} term(k), accumulated from k = N down so
/// the small terms are added first. T is 1-based: T[m], 1 <= m <= N.
template <typename TermFn>
std::vector<double> backward_tail_sums(std::size_t n, TermFn term) {
  std::vector<double> tail(n + 1, 0.0);
  KahanSum acc;
  for (std::size_t k = n; k > 0; --k) {
    acc += term(k);
    tail[k] = acc;
  }
  return tail;
}

}  // namespace

KernelOrder KernelOrder::finite(double r) {
  if (!(r >= 1.0)) throw std::domain_error("KernelOrder: r must be >= 1");
  return KernelOrder(false, r);
}

double power_mean(const KernelOrder& order, double x, double y) {
  const double hi = std::max(x, y);
  const double lo = std::min(x, y);
  if (order.is_infinite()) return hi;
  const double r = order.r();
  if (hi == 0.0) return 0.0;
  // hi * ((1 + (lo/hi)^r) / 2)^(1/r); the ratio form keeps large r finite
  return hi * std::pow(0.5 * (1.0 + std::pow(lo / hi, r)), 1.0 / r);
}

DenseMatrix weighted_mean_matrix(const WeightSequence& w, std::size_t n) {
  if (w.size() < n) throw std::invalid_argument("weighted_mean_matrix: weight list too short");
  DenseMatrix b(n, n);
  for (std::size_t i = 1; i <= n; ++i) {
    const double inv = 1.0 / w.prefix(i);
    for (std::size_t j = 1; j <= i; ++j) b(i - 1, j - 1) = w.lambda(j) * inv;
  }
  return b;
}

DenseSymMatrix gram_beta(const WeightSequence& w, std::size_t n) {
  if (w.size() < n) throw std::invalid_argument("gram_beta: weight list too short");
  const auto tail = backward_tail_sums(n, [&](std::size_t k) {
    const double lam = w.prefix(k);
    return 1.0 / (lam * lam);
  });
  DenseSymMatrix beta(n);
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = 1; j <= i; ++j)
      beta.set(i - 1, j - 1, w.lambda(i) * w.lambda(j) * tail[i]);
  return beta;
}

DenseSymMatrix gram_gamma(const WeightSequence& w, std::size_t n) {
  if (w.size() < n) throw std::invalid_argument("gram_gamma: weight list too short");
  std::vector<double> sq_prefix(n + 1, 0.0);
  KahanSum acc;
  for (std::size_t k = 1; k <= n; ++k) {
    acc += w.lambda(k) * w.lambda(k);
    sq_prefix[k] = acc;
  }
  DenseSymMatrix gamma(n);
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = 1; j <= i; ++j)
      gamma.set(i - 1, j - 1, sq_prefix[j] / (w.prefix(i) * w.prefix(j)));
  return gamma;
}

DenseSymMatrix m_alpha_matrix(double alpha, std::size_t n) {
  if (!(alpha > 0.5)) throw std::domain_error("m_alpha_matrix: alpha must exceed 1/2");
  const double a2 = alpha * alpha;
  const double r = 2.0 * alpha - 1.0;
  std::vector<double> pow_a(n + 1), pow_r(n + 1);
  for (std::size_t k = 1; k <= n; ++k) {
    pow_a[k] = ipow(k, alpha);
    pow_r[k] = ipow(k, r);
  }
  DenseSymMatrix m(n);
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = 1; j <= i; ++j)
      m.set(i - 1, j - 1, a2 * pow_r[j] / (r * pow_a[i] * pow_a[j]));
  return m;
}

namespace {

/// L_{2a-1}^{a-1}(i, i-1) for i = 1..n, the row weights of (3.0)/(3.3).
std::vector<double> log_mean_powers(double alpha, std::size_t n) {
  const double s = 2.0 * alpha - 1.0;
  std::vector<double> lp(n + 1, 0.0);
  for (std::size_t i = 1; i <= n; ++i)
    lp[i] = std::pow(log_mean(s, static_cast<double>(i), static_cast<double>(i - 1)),
                     alpha - 1.0);
  return lp;
}

}  // namespace

DenseSymMatrix n_alpha_matrix(double alpha, std::size_t n) {
  if (!(alpha > 0.5)) throw std::domain_error("n_alpha_matrix: alpha must exceed 1/2");
  const auto lp = log_mean_powers(alpha, n);
  const auto tail = backward_tail_sums(n, [&](std::size_t k) { return ipow(k, -2.0 * alpha); });
  const double a2 = alpha * alpha;
  DenseSymMatrix m(n);
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = 1; j <= i; ++j) m.set(i - 1, j - 1, a2 * lp[i] * lp[j] * tail[i]);
  return m;
}

DenseMatrix copson_L_matrix(double alpha, std::size_t n) {
  if (!(alpha > 0.5)) throw std::domain_error("copson_L_matrix: alpha must exceed 1/2");
  const auto lp = log_mean_powers(alpha, n);
  DenseMatrix c(n, n);
  for (std::size_t row = 1; row <= n; ++row) {
    const double w = alpha * lp[row];
    for (std::size_t i = row; i <= n; ++i) c(row - 1, i - 1) = w * ipow(i, -alpha);
  }
  return c;
}

DenseSymMatrix power_mean_kernel(const KernelOrder& order, std::size_t n) {
  DenseSymMatrix k(n);
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = 1; j <= i; ++j)
      k.set(i - 1, j - 1,
            1.0 / power_mean(order, static_cast<double>(i), static_cast<double>(j)));
  return k;
}

DenseSymMatrix generalized_kernel(const KernelOrder& order, double alpha, std::size_t n) {
  DenseSymMatrix k(n);
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = 1; j <= i; ++j) {
      const double x = ipow(i, alpha) * ipow(j, 1.0 - alpha);
      const double y = ipow(i, 1.0 - alpha) * ipow(j, alpha);
      k.set(i - 1, j - 1, 1.0 / power_mean(order, x, y));
    }
  return k;
}

DenseSymMatrix hilbert_matrix(std::size_t n) {
  DenseSymMatrix h(n);
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = 1; j <= i; ++j) h.set(i - 1, j - 1, 1.0 / static_cast<double>(i + j));
  return h;
}

DenseMatrix mv_skew_matrix(const SpacedSequence& s, double alpha) {
  if (!(alpha >= 1.0)) throw std::domain_error("mv_skew_matrix: alpha must be >= 1");
  const std::size_t n = s.size();
  DenseMatrix k(n, n);
  for (std::size_t r = 1; r <= n; ++r)
    for (std::size_t t = 1; t < r; ++t) {
      const double lr = s.value(r);
      const double lt = s.value(t);
      const double v =
          std::pow(lr * lt, 0.5 * (alpha - 1.0)) / (std::pow(lr, alpha) - std::pow(lt, alpha));
      k(r - 1, t - 1) = v;
      k(t - 1, r - 1) = -v;
    }
  return k;
}

DenseSymMatrix schur_x_matrix(const SpacedSequence& s, double alpha) {
  if (!(alpha >= 1.0)) throw std::domain_error("schur_x_matrix: alpha must be >= 1");
  const std::size_t n = s.size();
  DenseSymMatrix x(n);
  for (std::size_t r = 1; r <= n; ++r) {
    x.set(r - 1, r - 1, 1.0 / alpha);
    for (std::size_t t = 1; t < r; ++t) {
      const double lr = s.value(r);
      const double lt = s.value(t);
      x.set(r - 1, t - 1,
            (lr - lt) * std::pow(lr * lt, 0.5 * (alpha - 1.0)) /
                (std::pow(lr, alpha) - std::pow(lt, alpha)));
    }
  }
  return x;
}

namespace {

constexpr double kConjugateSymmetryTol = 1e-7;

}  // namespace

DenseSymMatrix conjugate_n_alpha(double alpha, std::size_t n) {
  if (!(alpha > 0.5)) throw std::domain_error("conjugate_n_alpha: alpha must exceed 1/2");
  DenseMatrix e(n, n), e_inv(n, n), f(n, n), f_inv(n, n);
  for (std::size_t i = 1; i <= n; ++i) {
    e(i - 1, i - 1) = ipow(i, alpha);
    if (i > 1) e(i - 1, i - 2) = -ipow(i - 1, alpha);
    for (std::size_t j = 1; j <= i; ++j) e_inv(i - 1, j - 1) = ipow(i, -alpha);
    const double fd = 1.0 / std::sqrt(alpha_weight(static_cast<long long>(i), 2.0 * alpha - 1.0));
    f(i - 1, i - 1) = fd;
    f_inv(i - 1, i - 1) = 1.0 / fd;
  }
  const DenseMatrix m = m_alpha_matrix(alpha, n).to_dense();
  const DenseMatrix prod = multiply(f, multiply(e, multiply(m, multiply(e_inv, f_inv))));
  return DenseSymMatrix::from_dense(prod, kConjugateSymmetryTol);
}

DenseSymMatrix conjugate_gamma(const WeightSequence& w, std::size_t n) {
  if (w.size() < n) throw std::invalid_argument("conjugate_gamma: weight list too short");
  for (std::size_t k = 1; k <= n; ++k)
    if (!(w.lambda(k) > 0.0))
      throw std::domain_error("conjugate_gamma: weights must be strictly positive");
  DenseMatrix h(n, n), h_inv(n, n), g(n, n), g_inv(n, n);
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = 1; j <= i; ++j) h(i - 1, j - 1) = w.lambda(j);
    h_inv(i - 1, i - 1) = 1.0 / w.lambda(i);
    if (i > 1) h_inv(i - 1, i - 2) = -1.0 / w.lambda(i);
    g(i - 1, i - 1) = w.prefix(1) / w.prefix(i);
    g_inv(i - 1, i - 1) = w.prefix(i) / w.prefix(1);
  }
  const DenseMatrix a = gram_beta(w, n).to_dense();
  const DenseMatrix prod = multiply(g, multiply(h, multiply(a, multiply(h_inv, g_inv))));
  return DenseSymMatrix::from_dense(prod, kConjugateSymmetryTol);
}

}  // namespace meannorm
