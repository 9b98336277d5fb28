#include "meannorm/weights.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "meannorm/kahan.hpp"
#include "meannorm/means.hpp"

namespace meannorm {

WeightSequence::WeightSequence(std::vector<double> lambda) : lambda_(std::move(lambda)) {
  if (lambda_.empty()) throw std::invalid_argument("WeightSequence: empty weight list");
  if (!(lambda_.front() > 0.0))
    throw std::invalid_argument("WeightSequence: lambda_1 must be positive");
  prefix_.resize(lambda_.size());
  KahanSum acc;
  for (std::size_t k = 0; k < lambda_.size(); ++k) {
    if (!(lambda_[k] >= 0.0) || !std::isfinite(lambda_[k]))
      throw std::invalid_argument("WeightSequence: weights must be finite and nonnegative");
    acc += lambda_[k];
    prefix_[k] = acc;
  }
}

WeightSequence WeightSequence::ones(std::size_t n) {
  return WeightSequence(std::vector<double>(n, 1.0));
}

WeightSequence WeightSequence::alpha_differences(double alpha, std::size_t n) {
  std::vector<double> w(n);
  for (std::size_t k = 1; k <= n; ++k) w[k - 1] = alpha_weight(static_cast<long long>(k), alpha);
  return WeightSequence(std::move(w));
}

WeightSequence WeightSequence::power_weights(double alpha, std::size_t n) {
  std::vector<double> w(n);
  for (std::size_t k = 1; k <= n; ++k) w[k - 1] = std::pow(static_cast<double>(k), alpha - 1.0);
  return WeightSequence(std::move(w));
}

SpacedSequence::SpacedSequence(std::vector<double> values) : values_(std::move(values)) {
  if (values_.empty()) throw std::invalid_argument("SpacedSequence: empty sequence");
  if (!(values_.front() > 0.0))
    throw std::invalid_argument("SpacedSequence: values must be positive");
  delta_ = std::numeric_limits<double>::infinity();
  for (std::size_t r = 1; r < values_.size(); ++r) {
    const double gap = values_[r] - values_[r - 1];
    if (!(gap > 0.0)) throw std::invalid_argument("SpacedSequence: values must be strictly increasing");
    delta_ = std::min(delta_, gap);
  }
}

SpacedSequence SpacedSequence::integers(std::size_t n) {
  std::vector<double> v(n);
  for (std::size_t r = 1; r <= n; ++r) v[r - 1] = static_cast<double>(r);
  return SpacedSequence(std::move(v));
}

}  // namespace meannorm
