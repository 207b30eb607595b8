#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "polyapprox/series.hpp"
#include "polyapprox/spaces.hpp"

namespace polyapprox {

// Rows a_{n,0..n} of a summability array, T_n(f) = sum_k a_{nk} s_k(f).
class TriangularArray {
 public:
  TriangularArray() = default;
  // Throws kInvalidArgument unless row n has exactly n + 1 entries.
  explicit TriangularArray(std::vector<std::vector<Complex>> rows);

  std::size_t row_count() const { return rows_.size(); }
  bool has_row(std::size_t n) const { return n < rows_.size(); }
  // Throws kMissingRow.
  const std::vector<Complex>& row(std::size_t n) const;

  // Multipliers m_j = sum_{k >= j} a_{nk}, so that T_n(f) = sum_j m_j c_j z^j.
  std::vector<Complex> multipliers(std::size_t n) const;

  static TriangularArray partial_sums(std::size_t n_max);
  static TriangularArray cesaro(std::size_t n_max);
  // Row N averages s_{m+1}, ..., s_N with m = floor(N/2); row 2n+1 is
  // 2 sigma_{2n+1} - sigma_n. Row N reproduces polynomials of degree <= m.
  static TriangularArray vallee_poussin(std::size_t n_max);

 private:
  std::vector<std::vector<Complex>> rows_;
};

TaylorPoly partial_sum(std::size_t n, const TaylorPoly& f);
// Coefficient form: sum_{k<=n} (1 - k/(n+1)) c_k z^k.
TaylorPoly cesaro(std::size_t n, const TaylorPoly& f);
// Averaging form: (1/(n+1)) sum_{k<=n} s_k(f).
TaylorPoly cesaro_by_averaging(std::size_t n, const TaylorPoly& f);
TaylorPoly apply_array(const TriangularArray& a, std::size_t n, const TaylorPoly& f);

// Orthogonal projection onto span{1, z, ..., z^n} in the space's inner
// product, from the leading Gram block. Throws kNotAHilbertSpace.
TaylorPoly gram_projection(const SpaceHandle& space, std::size_t n,
                           const TaylorPoly& f);

struct SchemeCertificate {
  double bound = 1.0;                  // M with ||T_n|| <= M
  std::vector<TaylorPoly> dense_sample;
  std::vector<std::size_t> degrees;    // d(n)
  std::vector<double> residuals;       // max_j ||P_{d(n)} y_j - y_j||
  std::vector<std::size_t> sample_counts;  // how many y_j were enforced at n
};

struct PartialSumScheme {};
struct CesaroScheme {};
struct ArrayScheme {
  std::shared_ptr<const TriangularArray> array;
};
struct ProjectionScheme {
  SpaceHandle space;
};
// P_{d(n)} from a certificate, re-indexed so that deg T_n(f) <= n: T_n uses
// the latest certified stage whose degree fits within n.
struct ApproximantScheme {
  SpaceHandle space;
  std::vector<std::size_t> degrees;
};

class Scheme {
 public:
  using Kind = std::variant<PartialSumScheme, CesaroScheme, ArrayScheme,
                            ProjectionScheme, ApproximantScheme>;

  static Scheme partial_sums() { return Scheme(PartialSumScheme{}); }
  static Scheme cesaro() { return Scheme(CesaroScheme{}); }
  static Scheme array(TriangularArray a);
  static Scheme projection(SpaceHandle space);
  static Scheme from_approximants(SpaceHandle space, std::vector<std::size_t> degrees);

  const Kind& kind() const { return kind_; }
  std::string name() const;

  // T_n(f); a polynomial of degree <= n.
  TaylorPoly apply(std::size_t n, const TaylorPoly& f) const;

  // Diagonal multipliers when T_n acts coefficientwise (partial sums,
  // Cesaro, arrays); nullopt for projection-type schemes.
  std::optional<std::vector<Complex>> multipliers(std::size_t n) const;

  // Projection degree actually used at stage n (projection-type schemes).
  std::size_t approximant_degree(std::size_t n) const;

 private:
  explicit Scheme(Kind kind) : kind_(std::move(kind)) {}
  Kind kind_;
};

struct SchemeBuild {
  Scheme scheme;
  SchemeCertificate certificate;
};

// For n = 0..n_max picks the smallest d(n) with
// ||P_{d(n)} y_j - y_j|| <= 1/(n+1) for the first min(n+1, |sample|) sample
// functions. Throws kNotAHilbertSpace, kInvalidArgument (empty sample or
// M < 1) and kHorizonExhausted.
SchemeBuild build_scheme_from_approximants(const SpaceHandle& space,
                                           const std::vector<TaylorPoly>& dense_sample,
                                           double bound, std::size_t n_max);

// Lower witness and optional structural/exact values for ||T_n||.
struct OperatorNormEstimate {
  double lower = 0.0;
  std::optional<double> upper;
  std::optional<double> exact;
  std::string method;
};

struct SchemeReport {
  std::size_t n = 0;
  double error_norm = 0.0;
  double image_norm = 0.0;
  std::optional<std::size_t> degree;
  std::optional<OperatorNormEstimate> operator_norm;
};

// ||T_n(f) - f|| and ||T_n(f)|| for n = 0..n_max.
std::vector<SchemeReport> scheme_error_curve(const Scheme& scheme,
                                             const SpaceHandle& space,
                                             const TaylorPoly& f, std::size_t n_max);

}  // namespace polyapprox
