#include "meannorm/means.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "meannorm/kahan.hpp"

namespace meannorm {

namespace {

constexpr double kBranchWindow = 1e-9;

[[noreturn]] void domain_fail(const std::string& what) {
  throw std::domain_error("log_mean: " + what);
}

}  // namespace

double log_mean(double r, double a, double b) {
  if (!(a > 0.0)) domain_fail("a must be positive");
  if (!(b >= 0.0)) domain_fail("b must be nonnegative");
  if (a == b) domain_fail("a == b");

  const bool near_zero = std::abs(r) < kBranchWindow;
  const bool near_one = std::abs(r - 1.0) < kBranchWindow;

  if (b == 0.0) {
    if (near_one) return a / std::exp(1.0);
    if (!(r > 0.0)) domain_fail("b == 0 requires r > 0");
    // limit of the general branch: a * r^(-1/(r-1))
    return a * std::pow(r, -1.0 / (r - 1.0));
  }

  if (near_zero) return (a - b) / (std::log(a) - std::log(b));
  if (near_one) {
    // (1/e) (a^a / b^b)^(1/(a-b)) in log form
    const double ln = (a * std::log(a) - b * std::log(b)) / (a - b) - 1.0;
    return std::exp(ln);
  }
  const double ratio = (std::pow(a, r) - std::pow(b, r)) / (r * (a - b));
  return std::pow(ratio, 1.0 / (r - 1.0));
}

double power_sum_ratio(long long n, double r) {
  if (n < 1) throw std::domain_error("power_sum_ratio: n must be >= 1");
  if (!(r > 0.0)) throw std::domain_error("power_sum_ratio: r must be positive");
  KahanSum head;
  for (long long i = 1; i <= n; ++i) head += std::pow(static_cast<double>(i), r);
  const double tail = head.sum + std::pow(static_cast<double>(n + 1), r);
  const double num = head.sum / static_cast<double>(n);
  const double den = tail / static_cast<double>(n + 1);
  return std::pow(num / den, 1.0 / r);
}

double alpha_weight(long long k, double alpha) {
  if (!(alpha > 0.0)) throw std::domain_error("alpha_weight: alpha must be positive");
  if (k < 1) throw std::domain_error("alpha_weight: k must be >= 1");
  if (k == 1) return 1.0;
  const double kd = static_cast<double>(k);
  // k^a - (k-1)^a = -k^a * expm1(a * log1p(-1/k))
  return -std::pow(kd, alpha) * std::expm1(alpha * std::log1p(-1.0 / kd));
}

}  // namespace meannorm
