#include "meannorm/certificates.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "meannorm/kahan.hpp"

namespace meannorm {

namespace {

constexpr double kCertSlack = 1e-12;  // relative, per the slack ladder

void validate_test_sequences(const std::vector<double>& c, const std::vector<double>& d) {
  for (double v : c)
    if (!(v > 0.0)) throw std::domain_error("schur_test: c entries must be positive");
  for (double v : d)
    if (!(v > 0.0)) throw std::domain_error("schur_test: d entries must be positive");
}

/// Kahan sum with the terms sorted ascending.
double sorted_sum(std::vector<double>& terms) {
  std::sort(terms.begin(), terms.end());
  KahanSum acc;
  for (double t : terms) acc += t;
  return acc;
}

template <typename EntryFn>
SchurCertificate schur_test_impl(std::size_t rows, std::size_t cols, EntryFn entry,
                                 const std::vector<double>& c, const std::vector<double>& d,
                                 double p) {
  if (!(p > 1.0)) throw std::domain_error("schur_test: p must exceed 1");
  if (c.size() != cols || d.size() != rows)
    throw std::invalid_argument("schur_test: test sequence length mismatch");
  validate_test_sequences(c, d);

  const double q = p / (p - 1.0);
  SchurCertificate cert;
  cert.c = c;
  cert.d = d;
  cert.p = p;
  cert.analytic_bound = std::numeric_limits<double>::quiet_NaN();

  std::vector<double> terms;
  double u1 = 0.0;
  for (std::size_t i = 0; i < rows; ++i) {
    terms.clear();
    for (std::size_t j = 0; j < cols; ++j) {
      const double a = entry(i, j);
      if (a < 0.0) throw std::domain_error("schur_test: matrix entries must be nonnegative");
      terms.push_back(a * std::pow(c[j], 1.0 / p));
    }
    u1 = std::max(u1, sorted_sum(terms) / std::pow(d[i], 1.0 / p));
  }
  double u2 = 0.0;
  for (std::size_t j = 0; j < cols; ++j) {
    terms.clear();
    for (std::size_t i = 0; i < rows; ++i) terms.push_back(entry(i, j) * std::pow(d[i], 1.0 / q));
    u2 = std::max(u2, sorted_sum(terms) / std::pow(c[j], 1.0 / q));
  }
  cert.u1 = u1;
  cert.u2 = u2;
  cert.bound = std::pow(u1, 1.0 / q) * std::pow(u2, 1.0 / p);
  return cert;
}

}  // namespace

SchurCertificate schur_test(const DenseMatrix& a, const std::vector<double>& c,
                            const std::vector<double>& d, double p) {
  return schur_test_impl(
      a.rows(), a.cols(), [&a](std::size_t i, std::size_t j) { return a(i, j); }, c, d, p);
}

SchurCertificate schur_test(const DenseSymMatrix& a, const std::vector<double>& c,
                            const std::vector<double>& d, double p) {
  return schur_test_impl(
      a.size(), a.size(), [&a](std::size_t i, std::size_t j) { return a(i, j); }, c, d, p);
}

namespace {

std::vector<double> reciprocal_sequence(std::size_t n) {
  std::vector<double> c(n);
  for (std::size_t i = 1; i <= n; ++i) c[i - 1] = 1.0 / static_cast<double>(i);
  return c;
}

/// Row maxima of sum_j entry(i,j) sqrt(i/j) for a kernel whose rows are
/// nonincreasing in j; accumulating from j = N down adds smallest first.
template <typename TermFn>
double max_row_value(std::size_t n, TermFn term) {
  double u1 = 0.0;
  for (std::size_t i = 1; i <= n; ++i) {
    KahanSum acc;
    for (std::size_t j = n; j > 0; --j) acc += term(i, j);
    u1 = std::max(u1, acc.sum);
  }
  return u1;
}

}  // namespace

SchurCertificate hardy_certificate(std::size_t n) {
  if (n == 0) throw std::invalid_argument("hardy_certificate: N must be >= 1");
  SchurCertificate cert;
  cert.c = reciprocal_sequence(n);
  cert.d = cert.c;
  cert.p = 2.0;
  // gamma_ij sqrt(c_j/c_i) = sqrt(i/j) / max(i,j)
  cert.u1 = max_row_value(n, [](std::size_t i, std::size_t j) {
    return std::sqrt(static_cast<double>(i) / static_cast<double>(j)) /
           static_cast<double>(std::max(i, j));
  });
  cert.u2 = cert.u1;  // symmetric matrix, c = d
  cert.analytic_bound = 4.0 - 2.0 / std::sqrt(static_cast<double>(n));
  cert.bound = cert.analytic_bound;
  cert.violated = cert.u1 > cert.analytic_bound * (1.0 + kCertSlack);
  return cert;
}

SchurCertificate m_alpha_certificate(double alpha, std::size_t n) {
  if (!(alpha > 0.5) || !(alpha <= 1.5))
    throw std::domain_error("m_alpha_certificate: alpha must lie in (1/2, 3/2]");
  if (n == 0) throw std::invalid_argument("m_alpha_certificate: N must be >= 1");
  const double r = 2.0 * alpha - 1.0;
  const double constant = alpha * alpha / ((alpha - 0.5) * (alpha - 0.5));
  SchurCertificate cert;
  cert.c = reciprocal_sequence(n);
  cert.d = cert.c;
  cert.p = 2.0;
  // m_ij sqrt(i/j); rows are nonincreasing in j for alpha <= 3/2
  cert.u1 = max_row_value(n, [alpha, r](std::size_t i, std::size_t j) {
    const double id = static_cast<double>(i);
    const double jd = static_cast<double>(j);
    const double m = alpha * alpha *
                     std::pow(static_cast<double>(std::min(i, j)), r) /
                     (r * std::pow(id, alpha) * std::pow(jd, alpha));
    return m * std::sqrt(id / jd);
  });
  cert.u2 = cert.u1;
  cert.analytic_bound = constant * (1.0 - 0.5 / std::sqrt(static_cast<double>(n)));
  cert.bound = constant;
  cert.violated = cert.u1 > cert.analytic_bound * (1.0 + kCertSlack);
  return cert;
}

double row_integral_majorant(double alpha, std::size_t i, std::size_t n) {
  if (!(alpha > 0.5)) throw std::domain_error("row_integral_majorant: alpha must exceed 1/2");
  if (i == 0 || n == 0) throw std::invalid_argument("row_integral_majorant: indices are 1-based");
  const double constant = alpha * alpha / ((alpha - 0.5) * (alpha - 0.5));
  const double m = static_cast<double>(n) / static_cast<double>(i);
  if (m <= 1.0) return 0.5 * constant * std::pow(m, alpha - 0.5);
  return constant * (1.0 - 0.5 * std::pow(m, 0.5 - alpha));
}

}  // namespace meannorm
