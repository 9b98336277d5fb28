#pragma once

// Test-only reference arithmetic at 256-bit precision (MPFR). Used to pin
// expected values where binary64 evaluation could hide cancellation; the
// library under test never links against this.

namespace meannorm::testing {

/// k^alpha - (k-1)^alpha evaluated at 256-bit precision, rounded to
/// binary64 at the end.
double alpha_weight_reference(long long k, double alpha);

/// L_r(a, b) for r not in {0, 1}, 256-bit arithmetic.
double log_mean_reference(double r, double a, double b);

}  // namespace meannorm::testing
