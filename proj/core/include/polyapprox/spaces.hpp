#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "polyapprox/gram.hpp"
#include "polyapprox/hb.hpp"
#include "polyapprox/series.hpp"

namespace polyapprox {

inline constexpr std::size_t kDefaultHorizon = 512;
inline constexpr std::size_t kDefaultOversampling = 16;

// Positive weights alpha_0..alpha_N. The optional certificate is a caller
// supplied bound delta_n >= |alpha_n^{1/n} - 1|; it is carried, not checked.
struct WeightSequence {
  std::vector<double> alpha;
  std::optional<std::vector<double>> limit_certificate;

  std::size_t horizon() const { return alpha.empty() ? 0 : alpha.size() - 1; }

  static WeightSequence constant(std::size_t horizon, double value = 1.0);
  // alpha_n = n + 1.
  static WeightSequence linear(std::size_t horizon);
  // alpha_n = base^n.
  static WeightSequence geometric(std::size_t horizon, double base);
};

struct AdmissibilityReport {
  // max |alpha_n^{1/n} - 1| over n in [N/2, N], n >= 1.
  double tail_deviation = 0.0;
  // |alpha_N^{1/N} - 1| at the last index.
  double final_deviation = 0.0;
  double threshold = 0.0;
  bool pass = false;
  // Always set: a finite horizon cannot decide the limit.
  std::string note;
};

// Throws kNonpositiveWeight if any alpha_n <= 0 (or is not finite).
AdmissibilityReport check_weight_admissible(const WeightSequence& w,
                                            double threshold = 0.05);

enum class SpaceKind { kWeightedCoefficient, kGramHilbert, kSupCircle, kHb };

std::string_view to_string(SpaceKind kind);

// A finite-horizon Banach space of holomorphic functions on the disk. Handles
// are immutable and cheap to copy; any factorization is done once at
// construction.
class SpaceHandle {
 public:
  // (sum |c_n|^p alpha_n^p)^{1/p}, 1 <= p < infinity.
  static SpaceHandle weighted(WeightSequence weights, double p = 2.0);
  // H^2 = weighted with p = 2, alpha = 1.
  static SpaceHandle hardy(std::size_t horizon = kDefaultHorizon);
  static SpaceHandle gram(GramMatrix g);
  // Sampled max |f| on m = oversampling * (deg f + 1) roots of unity.
  static SpaceHandle sup_circle(std::size_t oversampling = kDefaultOversampling,
                                std::size_t horizon = kDefaultHorizon);
  static SpaceHandle hb(hb::HbDescriptor descriptor);

  SpaceKind kind() const;
  std::size_t horizon() const;
  bool is_hilbert() const;

  // Exponent p for weighted spaces, 2 for the other Hilbert kinds.
  std::optional<double> exponent() const;
  const WeightSequence* weights() const;
  std::size_t oversampling() const;
  const hb::HbDescriptor* hb_descriptor() const;

  // Monomial Gram matrix; throws kNotAHilbertSpace for non-Hilbert kinds.
  const GramMatrix& gram_matrix() const;

  double norm(const TaylorPoly& f) const;
  // Conjugate-linear in f. Throws kNotAHilbertSpace for sup and p != 2.
  Complex inner_product(const TaylorPoly& f, const TaylorPoly& g) const;
  std::vector<double> monomial_norms(std::size_t up_to) const;

  std::string describe() const;

 private:
  struct Impl;
  explicit SpaceHandle(std::shared_ptr<const Impl> impl);
  std::shared_ptr<const Impl> impl_;
};

inline double norm(const SpaceHandle& space, const TaylorPoly& f) {
  return space.norm(f);
}
inline Complex inner_product(const SpaceHandle& space, const TaylorPoly& f,
                             const TaylorPoly& g) {
  return space.inner_product(f, g);
}
inline std::vector<double> monomial_norms(const SpaceHandle& space,
                                          std::size_t up_to) {
  return space.monomial_norms(up_to);
}

// Sampled sup of |f| on the circle at the given oversampling.
double sup_norm_estimate(const TaylorPoly& f,
                         std::size_t oversampling = kDefaultOversampling);

}  // namespace polyapprox
