#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "polyapprox/schemes.hpp"
#include "polyapprox/series.hpp"
#include "polyapprox/spaces.hpp"

namespace polyapprox::diagnostics {

// (1/2pi) int |sum_{k=0}^n e^{ik t}| dt by Gauss-Legendre on the n+1 panels
// between consecutive kernel zeros. Throws kInsufficientQuadrature when
// quadrature_points < 64 (n + 1).
double lebesgue_constant(std::size_t n, std::size_t quadrature_points);
double lebesgue_constant(std::size_t n);

// F_m(z) = sum_{k=1}^m (z^{m-k} - z^{m+k}) / k. Bounded sup norm, while
// s_{m-1}(F_m)(1) = H_m.
TaylorPoly fejer_block(std::size_t m);

// Landau's constant G_m = sum_{k<=m} (binom(2k,k) / 4^k)^2, the norm of
// f -> s_m(f)(1) on the unit ball of H^infinity.
double landau_constant(std::size_t m);

// Taylor coefficients 0..degree of z^m p(1/z) / p(z), p = sum_{k<=m}
// binom(2k,k)/4^k z^k: unimodular on the circle, and s_m of it equals G_m at
// z = 1. Truncation at degree 4m keeps the sampled sup within about 1%.
TaylorPoly landau_block(std::size_t m, std::size_t degree);

struct HumpBlock {
  std::size_t offset = 0;   // D_j
  std::size_t order = 0;    // m_j = base^j
  double weight = 0.0;
  std::size_t spike_index = 0;  // D_j + m_j, where s_n peaks
};

struct GlidingHump {
  TaylorPoly f;
  std::vector<HumpBlock> blocks;
};

// f = sum_j w_j z^{D_j} B_{m_j} with Landau blocks B_m of degree 4 m,
// m_j = base^j, disjoint coefficient ranges, and weights
// w_j = 1/(blocks - j + 1)^2 so the widest block carries weight 1. Every
// block equals 1 at z = 1, so full earlier blocks add to the spike of the
// current one. Throws kInvalidArgument (blocks < 1, base < 2) and
// kHorizonExceeded.
GlidingHump gliding_hump(std::size_t blocks, std::size_t base_degree,
                         std::size_t horizon = kDefaultHorizon);

// Sampled sup norms of s_n(f), sigma_n(f) and of their errors against f,
// n = 0..n_max (default deg f), on the common grid of
// oversampling * (deg f + 1) nodes, in one O(m n_max) sweep.
struct SupProfile {
  double f_norm = 0.0;
  std::vector<double> partial;
  std::vector<double> cesaro;
  std::vector<double> partial_error;
  std::vector<double> cesaro_error;
};
SupProfile sup_profile(const TaylorPoly& f,
                       std::size_t oversampling = kDefaultOversampling,
                       std::optional<std::size_t> n_max = std::nullopt);

struct NormEstimateOptions {
  std::size_t trials = 64;
  std::uint64_t seed = 0;
  std::size_t power_steps = 30;
  // Largest Hilbert dimension for which the exact singular value is computed.
  std::size_t exact_limit = 600;
};

// Known bound on ||T_n|| from structure alone (kernel positivity, Lebesgue
// kernel, contraction of coefficient multipliers, orthogonal projection).
std::optional<std::pair<double, std::string>> structural_upper_bound(
    const Scheme& scheme, const SpaceHandle& space, std::size_t n);

// Lower bound from explicit inputs (random unit vectors; power-iteration
// refinement and the exact singular value in Hilbert kinds; gliding-hump type
// seeds in sup kinds), upper bound from structure.
OperatorNormEstimate scheme_norm_estimate(const Scheme& scheme,
                                          const SpaceHandle& space, std::size_t n,
                                          const NormEstimateOptions& options = {});

enum class GrowthTag { kBounded, kLogLike, kPowerLike };
std::string_view to_string(GrowthTag tag);

struct TrendFit {
  GrowthTag tag = GrowthTag::kBounded;
  double residual_constant = 0.0;
  double residual_log = 0.0;
  double residual_sqrt = 0.0;
  double relative_rise = 0.0;  // fitted rise over the window / mean level
};

// Least squares of y_n against {1}, {1, ln n}, {1, sqrt n} over the last
// half of the indices. Bounded unless a growing model gains at least 5% of
// the mean level across the window.
TrendFit fit_growth(const std::vector<double>& values);

struct TrendReport {
  std::vector<double> image_norms;  // ||T_n f||
  std::vector<double> error_norms;  // ||T_n f - f||
  TrendFit fit;
  std::string note;
};

// A finite-horizon trend, not a proof of divergence.
TrendReport divergence_trend(const SpaceHandle& space, const Scheme& scheme,
                             const TaylorPoly& f, std::size_t n_max);

}  // namespace polyapprox::diagnostics
