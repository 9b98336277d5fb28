#pragma once

namespace meannorm {

/// Generalized logarithmic mean L_r(a, b).
///
/// Three-branch definition:
///   r != 0, 1 :  ((a^r - b^r) / (r (a - b)))^(1/(r-1))
///   r == 0    :  (a - b) / (log a - log b)
///   r == 1    :  (1/e) (a^a / b^b)^(1/(a-b))
///
/// Domain: a > 0, b >= 0, a != b. b == 0 is admitted only for r > 0,
/// where the continuous limit b -> 0+ gives
///   L_r(a, 0) = a r^(-1/(r-1))   (r != 1),   L_1(a, 0) = a / e.
/// The general branch is replaced by the r = 0 / r = 1 branch when r is
/// within 1e-9 of those points (removable singularities).
///
/// Strictly increasing in r for fixed (a, b); lies strictly between
/// min(a,b) and max(a,b) when b > 0.
double log_mean(double r, double a, double b);

/// Power-sum ratio P_n(r) = ((1/n) sum_{i<=n} i^r / ((1/(n+1)) sum_{i<=n+1} i^r))^(1/r).
/// Requires n >= 1, r > 0. Satisfies P_n(r) > n/(n+1).
double power_sum_ratio(long long n, double r);

/// Difference weight k^alpha - (k-1)^alpha for k >= 1, alpha > 0.
/// Evaluated as -k^alpha * expm1(alpha * log1p(-1/k)) so the leading
/// digits survive for large k; direct subtraction loses everything near
/// k ~ 1e8 when alpha < 1.
double alpha_weight(long long k, double alpha);

}  // namespace meannorm
