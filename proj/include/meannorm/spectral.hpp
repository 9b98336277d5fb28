#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "meannorm/matrix.hpp"

namespace meannorm {

struct IterationConfig {
  double tolerance = 1e-12;
  std::uint64_t max_iterations = 100000;
};

/// Result of an iterative norm estimate. `value` is always the Rayleigh
/// quotient (or p-norm ratio) of a feasible vector, hence a lower bound on
/// the true norm. `converged` implies `residual <= tolerance` scale-free.
struct NormEstimate {
  double value = 0.0;
  std::uint64_t iterations = 0;
  double residual = 0.0;
  bool converged = false;
};

/// Largest eigenvalue magnitude of a symmetric matrix by deterministic
/// power iteration. Start vector is all ones normalized; a stalled
/// Rayleigh quotient (32 consecutive iterations of no progress while the
/// residual stays large) triggers the fixed perturbation v_i += 1/(3+i)
/// followed by renormalization. Residual is ||A v - theta v||_2 and the
/// stopping rule is residual <= tol * max(1, |theta|).
NormEstimate spectral_norm_sym(const DenseSymMatrix& a, const IterationConfig& cfg = {});

/// Power iteration over an abstract symmetric operator of dimension n.
NormEstimate spectral_norm_apply(
    std::size_t n, const std::function<void(const std::vector<double>&, std::vector<double>&)>& apply,
    const IterationConfig& cfg = {});

/// All eigenvalues, ascending, by cyclic-by-row Jacobi rotations with the
/// usual threshold strategy (at most 64 sweeps). Brute-force oracle for
/// the power iterations; limited to n <= 2048.
std::vector<double> eig_sym_all(const DenseSymMatrix& a);

/// l2 -> l2 operator norm: square root of the top eigenvalue of B^t B,
/// iterated as x -> B^t (B x) without forming the Gram matrix. The
/// residual/tolerance bookkeeping refers to the B^t B iteration.
NormEstimate operator_norm_2(const DenseMatrix& b, const IterationConfig& cfg = {});

/// Largest singular value; identical machinery to operator_norm_2, named
/// for the bilinear-form bounds on skew kernels.
NormEstimate max_singular_value(const DenseMatrix& k, const IterationConfig& cfg = {});

/// l^p -> l^p operator norm of a nonnegative matrix by the nonlinear
/// (dual-exponent) power method:
///   y = B x,  u = (y/||y||_p)^(p-1),  z = B^t u,  x <- z^(q-1) / ||.||_p.
/// The estimate ||y||_p is nondecreasing; the residual is the duality gap
/// (||z||_q - ||y||_p) / max(1, ||y||_p). Requires entries >= 0 and p > 1.
NormEstimate operator_norm_p(const DenseMatrix& b, double p, const IterationConfig& cfg = {});

struct PsdVerdict {
  bool positive_semidefinite = false;
  double min_eigenvalue = 0.0;  // the witness
};

/// min eigenvalue >= -tol, decided by the Jacobi oracle.
PsdVerdict is_positive_semidefinite(const DenseSymMatrix& a, double tol = 1e-10);

}  // namespace meannorm
