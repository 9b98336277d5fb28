#pragma once

namespace meannorm {

/// Compensated (Kahan) accumulator. Tracks the rounding error of each
/// addition and feeds it back into the next one.
struct KahanSum {
  double sum = 0.0;
  double carry = 0.0;

  void add(double value) {
    const double y = value - carry;
    const double t = sum + y;
    carry = (t - sum) - y;
    sum = t;
  }

  KahanSum& operator+=(double value) {
    add(value);
    return *this;
  }

  operator double() const { return sum; }
};

}  // namespace meannorm
