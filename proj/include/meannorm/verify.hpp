#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "meannorm/rng.hpp"
#include "meannorm/weights.hpp"

namespace meannorm {

/// Outcome of one verification run. worst_margin is the minimum of
/// (bound - value) over everything the suite tested; passed means it
/// stayed above the suite's slack. witness describes the extremal
/// instance.
struct CheckReport {
  std::string suite;
  bool passed = false;
  double worst_margin = 0.0;
  std::string witness;
  std::int64_t instances_tested = 0;
};

enum class HardyFamily { bennett7, bennett8 };

/// Weighted-mean inequality trials: for random nonnegative unit-l^p
/// vectors, sum_n |row mean|^p <= (ap/(ap-1))^p, with lambda_k =
/// k^a - (k-1)^a (bennett7) or k^(a-1) (bennett8). Also runs the
/// operator_norm_p estimate against ap/(ap-1). Requires ap > 1.
///
/// bennett8 with 1 < alpha < 2 (other than alpha = 1 + 1/p) is an open
/// case: margins are recorded but never asserted there.
CheckReport verify_hardy_type(HardyFamily family, double alpha, double p, std::size_t n,
                              std::size_t trials, TrialRng& rng);

/// gamma_ij <= m_ij pointwise for lambda_k = k^a - (k-1)^a, slack 1e-13.
CheckReport check_gamma_le_m(double alpha, std::size_t n);

/// gamma_ij >= 1/max(i,j) pointwise for nonincreasing weights, plus the
/// induced spectral domination over the 1/max kernel.
CheckReport check_gamma_ge_maxinv(const WeightSequence& w, std::size_t n);

/// sum_{i<=k} i^(a-1) / sum_{i<=m} i^(a-1) <= (k/m)^a over all pairs
/// k <= m <= n, for 1/2 < alpha <= 1.
CheckReport check_majorization(double alpha, std::size_t n);

/// The two scalar inequalities behind the skew-kernel bound, in the
/// normalized variable t = lambda_r/lambda_s > 1:
///   (t^(a-1) + t^((a-1)/2)(t^(a-1)+1)) / (t^a-1)^2 <= 3/(a^2 (t-1)^2)
/// and its y = t^(a-1) form (checked for alpha > 1, where the
/// substitution is defined). Relative slack 1e-12.
CheckReport check_scalar_14(double alpha, const std::vector<double>& t_grid);

/// Midpoint-mean-endpoint ordering for a convex function, with the mean
/// computed by composite Simpson quadrature (at least 1024 panels).
CheckReport check_hadamard_midpoint(const std::function<double(double)>& h, double a, double b,
                                    std::size_t panels, const std::string& label);

/// Largest singular value of the skew kernel <= pi/(alpha delta).
CheckReport verify_mv_bound(const SpacedSequence& s, double alpha);

/// Schur's multiplier matrix: minimum eigenvalue >= -1e-10 and diagonal
/// exactly 1/alpha.
CheckReport check_x_psd(const SpacedSequence& s, double alpha);

/// The two similarity transformations and the shared spectrum of
/// M(alpha)/N(alpha), with lambda_k = k^a - (k-1)^a for the gamma side.
CheckReport check_similarity_suite(double alpha, std::size_t n);

/// Closing inequality: for random nonnegative unit vectors,
///   sum_n |sum_{i<=n} a L_s^(a-1)(i,i-1) n^(-a) a_i|^2 <= a^2/(a-1/2)^2,
/// for s between alpha and 2 alpha - 1.
CheckReport check_final_L_s(double alpha, double s, std::size_t n, std::size_t trials,
                            TrialRng& rng);

/// ||A||_{p,p} <= q for weighted mean matrices with nondecreasing
/// weights: norm estimate plus random trials.
CheckReport check_bennett_increasing(const WeightSequence& w, double p, std::size_t n,
                                     std::size_t trials, TrialRng& rng);

/// Grid of t = 1 + g with g log-spaced in [lo - 1, hi - 1]; covers both
/// the t -> 1+ and the large-t regime.
std::vector<double> log_grid_from_one(double lo, double hi, std::size_t points);

/// Coordinates uniform in [0,1) from the rng, then normalized to unit
/// p-norm.
std::vector<double> random_unit_vector(TrialRng& rng, std::size_t n, double p);

}  // namespace meannorm
