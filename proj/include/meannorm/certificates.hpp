#pragma once

#include <cstddef>
#include <vector>

#include "meannorm/matrix.hpp"

namespace meannorm {

/// Schur test data for a nonnegative matrix A and exponent p:
///   U1 = max_i sum_j A_ij c_j^(1/p) / d_i^(1/p),
///   U2 = max_j sum_i A_ij d_i^(1/q) / c_j^(1/q),
///   bound = U1^(1/q) U2^(1/p)  >=  ||A||_{p,p}.
/// The paper's named certificates also carry the analytic (integral)
/// bound they are checked against; `violated` records a computed row
/// value exceeding it.
struct SchurCertificate {
  std::vector<double> c;
  std::vector<double> d;
  double p = 2.0;
  double u1 = 0.0;
  double u2 = 0.0;
  double bound = 0.0;
  double analytic_bound = 0.0;  // NaN when the certificate is purely computed
  bool violated = false;
};

/// Evaluate the Schur test. Row/column sums use compensated summation
/// with the terms sorted ascending. Requires nonnegative A, positive c
/// and d of matching length, p > 1.
SchurCertificate schur_test(const DenseMatrix& a, const std::vector<double>& c,
                            const std::vector<double>& d, double p);
SchurCertificate schur_test(const DenseSymMatrix& a, const std::vector<double>& c,
                            const std::vector<double>& d, double p);

/// The paper's Hardy certificate: c = d = (1/i) against gamma(ones, N) at
/// p = 2, rows evaluated directly from gamma_ij = 1/max(i,j) without
/// materializing the matrix. analytic_bound = 4 - 2/sqrt(N); `violated`
/// is set if any computed row value exceeds it.
SchurCertificate hardy_certificate(std::size_t n);

/// Same certificate against M(alpha), 1/2 < alpha <= 3/2. The bound field
/// carries the constant alpha^2/(alpha-1/2)^2 and the analytic row bound
/// is alpha^2/(alpha-1/2)^2 (1 - 1/(2 sqrt(N))).
SchurCertificate m_alpha_certificate(double alpha, std::size_t n);

/// Closed form of the majorizing integral for row i of the M(alpha)
/// certificate: alpha^2/(2a-1) * int_0^{N/i} t^(a-3/2)/max(1,t^(2a-1)) dt.
/// Every row value is bounded by it (decreasing integrand). alpha = 1
/// gives the Hardy majorant 4 - 2 sqrt(i/N).
double row_integral_majorant(double alpha, std::size_t i, std::size_t n);

}  // namespace meannorm
