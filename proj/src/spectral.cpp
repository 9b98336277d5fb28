#include "meannorm/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace meannorm {

namespace {

double norm2(const std::vector<double>& v) {
  double s = 0.0;
  for (double x : v) s += x * x;
  return std::sqrt(s);
}

double dot(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

void normalize2(std::vector<double>& v) {
  const double n = norm2(v);
  for (double& x : v) x /= n;
}

constexpr int kStallLimit = 32;

}  // namespace

NormEstimate spectral_norm_apply(
    std::size_t n,
    const std::function<void(const std::vector<double>&, std::vector<double>&)>& apply,
    const IterationConfig& cfg) {
  NormEstimate est;
  if (n == 0) {
    est.converged = true;
    return est;
  }
  std::vector<double> v(n, 1.0 / std::sqrt(static_cast<double>(n)));
  std::vector<double> w(n);
  double theta_prev = 0.0;
  double res_prev = std::numeric_limits<double>::infinity();
  int stall = 0;
  for (std::uint64_t it = 1; it <= cfg.max_iterations; ++it) {
    apply(v, w);
    const double theta = dot(v, w);
    double res_sq = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double d = w[i] - theta * v[i];
      res_sq += d * d;
    }
    const double res = std::sqrt(res_sq);
    const double scale = std::max(1.0, std::abs(theta));
    est.value = std::abs(theta);
    est.iterations = it;
    est.residual = res;
    if (res <= cfg.tolerance * scale) {
      est.converged = true;
      return est;
    }
    // A stalled iteration has a flat Rayleigh quotient AND a residual
    // that stopped shrinking; a start vector trapped near a non-dominant
    // eigenvector shows exactly this (healthy slow convergence keeps the
    // residual decaying geometrically).
    if (std::abs(theta - theta_prev) < cfg.tolerance * scale && res >= res_prev) {
      if (++stall >= kStallLimit) {
        for (std::size_t i = 0; i < n; ++i) v[i] += 1.0 / (3.0 + static_cast<double>(i + 1));
        normalize2(v);
        stall = 0;
        theta_prev = 0.0;
        res_prev = std::numeric_limits<double>::infinity();
        continue;
      }
    } else {
      stall = 0;
    }
    theta_prev = theta;
    res_prev = res;
    v = w;
    normalize2(v);
  }
  return est;  // converged stays false
}

NormEstimate spectral_norm_sym(const DenseSymMatrix& a, const IterationConfig& cfg) {
  return spectral_norm_apply(
      a.size(),
      [&a](const std::vector<double>& x, std::vector<double>& y) {
        const std::size_t n = a.size();
        for (std::size_t i = 0; i < n; ++i) {
          double acc = 0.0;
          for (std::size_t j = 0; j < n; ++j) acc += a(i, j) * x[j];
          y[i] = acc;
        }
      },
      cfg);
}

std::vector<double> eig_sym_all(const DenseSymMatrix& a_in) {
  const std::size_t n = a_in.size();
  if (n > 2048) throw std::invalid_argument("eig_sym_all: matrix order exceeds 2048");
  if (n == 0) return {};
  DenseMatrix work = a_in.to_dense();
  std::vector<double>& a = work.data();
  const auto at = [&a, n](std::size_t i, std::size_t j) -> double& { return a[i * n + j]; };

  double fro_sq = 0.0;
  for (double v : a) fro_sq += v * v;
  const double off_target = 1e-14 * std::sqrt(fro_sq);

  auto off_norm = [&]() {
    double s = 0.0;
    for (std::size_t p = 0; p + 1 < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) s += at(p, q) * at(p, q);
    return std::sqrt(2.0 * s);
  };

  for (int sweep = 0; sweep < 64; ++sweep) {
    const double off = off_norm();
    if (off <= off_target) break;
    // threshold strategy: skip small pivots during the first sweeps
    const double tresh = sweep < 3 ? 0.2 * off / static_cast<double>(n) : 0.0;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = at(p, q);
        const double g = 100.0 * std::abs(apq);
        if (sweep > 3 && std::abs(at(p, p)) + g == std::abs(at(p, p)) &&
            std::abs(at(q, q)) + g == std::abs(at(q, q))) {
          at(p, q) = 0.0;
          at(q, p) = 0.0;
          continue;
        }
        if (std::abs(apq) <= tresh || apq == 0.0) continue;

        const double h = at(q, q) - at(p, p);
        double t;
        if (std::abs(h) + g == std::abs(h)) {
          t = apq / h;
        } else {
          const double theta = 0.5 * h / apq;
          t = 1.0 / (std::abs(theta) + std::sqrt(1.0 + theta * theta));
          if (theta < 0.0) t = -t;
        }
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        const double tau = s / (1.0 + c);
        const double tapq = t * apq;

        at(p, p) -= tapq;
        at(q, q) += tapq;
        at(p, q) = 0.0;
        at(q, p) = 0.0;
        for (std::size_t r = 0; r < n; ++r) {
          if (r == p || r == q) continue;
          const double arp = at(p, r);
          const double arq = at(q, r);
          const double new_p = arp - s * (arq + tau * arp);
          const double new_q = arq + s * (arp - tau * arq);
          at(p, r) = new_p;
          at(r, p) = new_p;
          at(q, r) = new_q;
          at(r, q) = new_q;
        }
      }
    }
  }
  if (off_norm() > off_target)
    throw std::runtime_error("eig_sym_all: Jacobi sweeps failed to converge");

  std::vector<double> eig(n);
  for (std::size_t i = 0; i < n; ++i) eig[i] = at(i, i);
  std::sort(eig.begin(), eig.end());
  return eig;
}

NormEstimate operator_norm_2(const DenseMatrix& b, const IterationConfig& cfg) {
  std::vector<double> mid(b.rows());
  NormEstimate est = spectral_norm_apply(
      b.cols(),
      [&](const std::vector<double>& x, std::vector<double>& y) {
        for (std::size_t i = 0; i < b.rows(); ++i) {
          double acc = 0.0;
          for (std::size_t j = 0; j < b.cols(); ++j) acc += b(i, j) * x[j];
          mid[i] = acc;
        }
        std::fill(y.begin(), y.end(), 0.0);
        for (std::size_t i = 0; i < b.rows(); ++i) {
          const double xi = mid[i];
          for (std::size_t j = 0; j < b.cols(); ++j) y[j] += b(i, j) * xi;
        }
      },
      cfg);
  est.value = std::sqrt(std::max(est.value, 0.0));
  return est;
}

NormEstimate max_singular_value(const DenseMatrix& k, const IterationConfig& cfg) {
  return operator_norm_2(k, cfg);
}

NormEstimate operator_norm_p(const DenseMatrix& b, double p, const IterationConfig& cfg) {
  if (!(p > 1.0)) throw std::domain_error("operator_norm_p: p must exceed 1");
  for (double v : b.data())
    if (v < 0.0) throw std::domain_error("operator_norm_p: matrix entries must be nonnegative");

  const double q = p / (p - 1.0);
  const std::size_t cols = b.cols();
  NormEstimate est;
  if (cols == 0 || b.rows() == 0) {
    est.converged = true;
    return est;
  }

  auto norm_p = [](const std::vector<double>& v, double e) {
    double s = 0.0;
    for (double x : v) s += std::pow(x, e);
    return std::pow(s, 1.0 / e);
  };

  std::vector<double> x(cols, std::pow(static_cast<double>(cols), -1.0 / p));
  std::vector<double> y, z;
  for (std::uint64_t it = 1; it <= cfg.max_iterations; ++it) {
    y = matvec(b, x);
    const double gamma = norm_p(y, p);
    est.value = gamma;
    est.iterations = it;
    if (gamma == 0.0) {  // only possible when B == 0
      est.residual = 0.0;
      est.converged = true;
      return est;
    }
    // dual vector of y: u_i = (y_i/gamma)^(p-1), so ||u||_q = 1 and u.y = gamma
    std::vector<double> u(y.size());
    for (std::size_t i = 0; i < y.size(); ++i) u[i] = std::pow(y[i] / gamma, p - 1.0);
    z = matvec_transposed(b, u);
    const double zq = norm_p(z, q);
    est.residual = std::max(0.0, zq - gamma) / std::max(1.0, gamma);
    if (est.residual <= cfg.tolerance) {
      est.converged = true;
      return est;
    }
    for (std::size_t j = 0; j < cols; ++j) x[j] = std::pow(z[j] / zq, q - 1.0);
    const double xp = norm_p(x, p);
    for (double& v : x) v /= xp;
  }
  return est;
}

PsdVerdict is_positive_semidefinite(const DenseSymMatrix& a, double tol) {
  PsdVerdict verdict;
  if (a.size() == 0) {
    verdict.positive_semidefinite = true;
    return verdict;
  }
  const auto eig = eig_sym_all(a);
  verdict.min_eigenvalue = eig.front();
  verdict.positive_semidefinite = eig.front() >= -tol;
  return verdict;
}

}  // namespace meannorm
