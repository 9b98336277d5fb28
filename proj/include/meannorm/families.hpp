#pragma once

#include <cstddef>

#include "meannorm/matrix.hpp"
#include "meannorm/weights.hpp"

namespace meannorm {

/// Exponent of the power-mean kernels P_r. The r -> infinity member is an
/// explicit enumerated value instead of a float infinity.
class KernelOrder {
 public:
  static KernelOrder finite(double r);
  static KernelOrder infinite() { return KernelOrder(true, 0.0); }

  bool is_infinite() const { return infinite_; }
  double r() const { return r_; }

 private:
  KernelOrder(bool inf, double r) : infinite_(inf), r_(r) {}
  bool infinite_;
  double r_;
};

/// Power mean P_r(x, y) = ((x^r + y^r)/2)^(1/r), P_inf(x, y) = max(x, y).
/// Scaled by max(x,y) internally so large r does not overflow.
double power_mean(const KernelOrder& order, double x, double y);

/// Lower-triangular weighted mean matrix, entries lambda_j / Lambda_i for
/// j <= i. Rows sum to one.
DenseMatrix weighted_mean_matrix(const WeightSequence& w, std::size_t n);

/// Gram form of the weighted mean matrix:
///   beta_{i,j} = lambda_i lambda_j sum_{k >= max(i,j)}^{N} Lambda_k^{-2}.
/// Tail sums accumulate backward (largest index first).
DenseSymMatrix gram_beta(const WeightSequence& w, std::size_t n);

/// Copson (adjoint) form:
///   gamma_{i,j} = (sum_{k <= min(i,j)} lambda_k^2) / (Lambda_i Lambda_j).
/// Invariant under scaling all weights by a positive constant.
DenseSymMatrix gram_gamma(const WeightSequence& w, std::size_t n);

/// M(alpha) with entries alpha^2 min(i,j)^(2 alpha - 1) / ((2 alpha - 1) i^alpha j^alpha).
/// Requires alpha > 1/2; the certificate range is (1/2, 3/2].
DenseSymMatrix m_alpha_matrix(double alpha, std::size_t n);

/// N(alpha) with entries
///   alpha^2 L_{2a-1}^{a-1}(i, i-1) L_{2a-1}^{a-1}(j, j-1) sum_{k >= max(i,j)}^{N} k^(-2a),
/// using the b = 0 convention of log_mean at i = 1.
DenseSymMatrix n_alpha_matrix(double alpha, std::size_t n);

/// Upper-triangular Copson factor with entries
///   c_{n,i} = alpha L_{2a-1}^{a-1}(n, n-1) / i^alpha for i >= n.
/// C^t C telescopes to M(alpha) and C C^t to N(alpha).
DenseMatrix copson_L_matrix(double alpha, std::size_t n);

/// Kernel (1/P_r(i, j))_{i,j}: r = 1 doubles the Hilbert matrix, r = inf
/// gives 1/max(i, j).
DenseSymMatrix power_mean_kernel(const KernelOrder& order, std::size_t n);

/// Kernel (1/P_r(i^a j^(1-a), i^(1-a) j^a))_{i,j}; alpha = 1 recovers
/// power_mean_kernel.
DenseSymMatrix generalized_kernel(const KernelOrder& order, double alpha, std::size_t n);

/// Hilbert matrix 1/(i + j).
DenseSymMatrix hilbert_matrix(std::size_t n);

/// Skew kernel of the generalized Hilbert inequality: zero diagonal and
///   K_{r,s} = (lambda_r lambda_s)^((a-1)/2) / (lambda_r^a - lambda_s^a).
/// Antisymmetric by construction. Requires alpha >= 1.
DenseMatrix mv_skew_matrix(const SpacedSequence& s, double alpha);

/// Schur's positive definite multiplier:
///   X_{r,s} = (lambda_r - lambda_s)(lambda_r lambda_s)^((a-1)/2) / (lambda_r^a - lambda_s^a),
/// diagonal exactly 1/alpha. Requires alpha >= 1.
DenseSymMatrix schur_x_matrix(const SpacedSequence& s, double alpha);

/// F E M(alpha) E^-1 F^-1 assembled from the explicit factors
///   e_{i,i} = i^a, e_{i,i-1} = -(i-1)^a;  e'_{i,j} = i^(-a) for j <= i;
///   f_{i,i} = (i^(2a-1) - (i-1)^(2a-1))^(-1/2).
/// Shares its spectrum with M(alpha) and reproduces n_alpha_matrix.
DenseSymMatrix conjugate_n_alpha(double alpha, std::size_t n);

/// G H A H^-1 G^-1 with A = gram_beta(w) and the explicit factors
///   h_{i,j} = lambda_j for j <= i;  h'_{i,i} = 1/lambda_i, h'_{i,i-1} = -1/lambda_i;
///   g_{i,i} = Lambda_1 / Lambda_i.
/// Reproduces gram_gamma(w). Requires strictly positive weights.
DenseSymMatrix conjugate_gamma(const WeightSequence& w, std::size_t n);

}  // namespace meannorm
