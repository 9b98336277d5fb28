#pragma once

#include <cstddef>
#include <vector>

namespace meannorm {

/// Positive weight list lambda_1, ..., lambda_N with compensated prefix
/// sums Lambda_k = sum_{i<=k} lambda_i. Requires lambda_1 > 0 and
/// lambda_k >= 0, so every Lambda_k is strictly positive.
class WeightSequence {
 public:
  explicit WeightSequence(std::vector<double> lambda);

  std::size_t size() const { return lambda_.size(); }

  /// 1-based accessors matching the subscripts of the formulas.
  double lambda(std::size_t k) const { return lambda_[k - 1]; }
  double prefix(std::size_t k) const { return prefix_[k - 1]; }

  const std::vector<double>& lambdas() const { return lambda_; }

  static WeightSequence ones(std::size_t n);
  /// lambda_k = k^alpha - (k-1)^alpha, so Lambda_n telescopes to n^alpha.
  static WeightSequence alpha_differences(double alpha, std::size_t n);
  /// lambda_k = k^(alpha-1).
  static WeightSequence power_weights(double alpha, std::size_t n);

 private:
  std::vector<double> lambda_;
  std::vector<double> prefix_;
};

/// Strictly increasing positive reals lambda_1 < ... < lambda_R with the
/// realized spacing floor delta = min_r (lambda_{r+1} - lambda_r).
/// A single-element sequence has delta = +infinity.
class SpacedSequence {
 public:
  explicit SpacedSequence(std::vector<double> values);

  std::size_t size() const { return values_.size(); }
  double value(std::size_t r) const { return values_[r - 1]; }
  double delta() const { return delta_; }
  const std::vector<double>& values() const { return values_; }

  /// The canonical instance lambda_r = r (delta = 1).
  static SpacedSequence integers(std::size_t n);

 private:
  std::vector<double> values_;
  double delta_ = 0.0;
};

}  // namespace meannorm
