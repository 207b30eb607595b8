#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "polyapprox/series.hpp"
#include "polyapprox/spaces.hpp"

namespace polyapprox::embedding {

// Model Y = l^p with the biorthogonal system e_n = alpha_n u_n,
// e_n^* = u_n^* / alpha_n (u_n the unit vectors), so ||e_n|| = alpha_n and
// ||e_n|| ||e_n^*|| = 1 <= M. The function space is X = J(Y) with
//
//   (J y)(z) = sum_n e_n^*(y) z^n = sum_n (y_n / alpha_n) z^n,
//
// normed by ||J y||_X = ||y||_p, i.e. the weighted coefficient norm.
struct EmbeddingSpec {
  WeightSequence weights;
  double p = 2.0;
  double bound = 1.0;  // M

  std::size_t horizon() const { return weights.horizon(); }
};

// Throws kNonpositiveWeight, kInvalidArgument (p < 1, M < 1) or
// kInvalidArgument when the weights fail the admissibility trend check.
void validate(const EmbeddingSpec& spec, double admissibility_threshold = 0.05);

// Entries of y in the coordinates of l^p.
using CoefficientVector = std::vector<Complex>;

// e_n as an element of Y.
CoefficientVector basis_vector(const EmbeddingSpec& spec, std::size_t n);

double model_norm(const EmbeddingSpec& spec, const CoefficientVector& y);

// Throws kDegreeExceedsHorizon if y has support beyond the horizon.
TaylorPoly embed_J(const EmbeddingSpec& spec, const CoefficientVector& y);

// X = J(Y) as a weighted coefficient space.
SpaceHandle built_space(const EmbeddingSpec& spec);

struct InclusionConstant {
  double value = 0.0;         // partial sum + tail bound
  double partial_sum = 0.0;   // sum_{n<=N} M r^n / alpha_n
  double tail_bound = 0.0;    // M r^{N+1} / (inf alpha over last quarter * (1 - r))
  bool tail_negligible = false;  // tail < 1% of partial sum
};

// C_r = sum_n M r^n / alpha_n. Throws kInvalidArgument unless 0 < r < 1 and
// kTailNotControlled when the tail estimate exceeds 10% of the partial sum.
InclusionConstant inclusion_constant(const EmbeddingSpec& spec, double r);

struct InclusionReport {
  double r = 0.0;
  double constant = 0.0;
  double max_ratio = 0.0;  // max over trials of sup_{|z|=r} |Jy| / ||y||
  std::size_t trials = 0;
  std::size_t violations = 0;
};

// Random y (seeded), sup over |z| = r sampled on 16 (N+1) points.
InclusionReport verify_inclusion_bound(const EmbeddingSpec& spec,
                                       std::size_t samples, double r,
                                       std::uint64_t seed = 0);

struct MembershipReport {
  double partial_sum = 0.0;   // sum_{n<=N} |c_n| alpha_n
  double tail_bound = 0.0;
  double norm_bound = 0.0;    // partial + tail: an upper bound for ||f||_X
  double cauchy_gap = 0.0;    // partial sum over (N/2, N]
  double best_rho = 0.0;
  bool converged = false;
};

// f = sum c_n z^n with radius of convergence R > 1. Tail majorant from
// |c_n| <= C_rho rho^{-n} at sampled rho in (1, R) and a geometric extension
// of the trailing weight growth. Throws kDivergentEvidence when no sampled
// rho dominates the weight growth or the partial sums are not Cauchy.
MembershipReport membership_beyond_disk(const EmbeddingSpec& spec,
                                        const std::function<Complex(std::size_t)>& coeff,
                                        double radius);

}  // namespace polyapprox::embedding
