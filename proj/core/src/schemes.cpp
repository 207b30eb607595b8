#include "polyapprox/schemes.hpp"

#include <algorithm>
#include <cmath>

#include "polyapprox/errors.hpp"

namespace polyapprox {

TriangularArray::TriangularArray(std::vector<std::vector<Complex>> rows)
    : rows_(std::move(rows)) {
  for (std::size_t n = 0; n < rows_.size(); ++n) {
    if (rows_[n].size() != n + 1) {
      throw Error(ErrorKind::kInvalidArgument,
                  "array row " + std::to_string(n) + " has " +
                      std::to_string(rows_[n].size()) + " entries, expected " +
                      std::to_string(n + 1));
    }
    for (Complex c : rows_[n]) {
      if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) {
        throw Error(ErrorKind::kNonFiniteValue,
                    "array row " + std::to_string(n) + " has a non-finite entry");
      }
    }
  }
}

const std::vector<Complex>& TriangularArray::row(std::size_t n) const {
  if (!has_row(n)) {
    throw Error(ErrorKind::kMissingRow, "array has no row " + std::to_string(n) +
                                            " (rows: " + std::to_string(rows_.size()) + ")");
  }
  return rows_[n];
}

std::vector<Complex> TriangularArray::multipliers(std::size_t n) const {
  const auto& r = row(n);
  std::vector<Complex> m(n + 1);
  Complex suffix{};
  for (std::size_t j = n + 1; j-- > 0;) {
    suffix += r[j];
    m[j] = suffix;
  }
  return m;
}

TriangularArray TriangularArray::partial_sums(std::size_t n_max) {
  std::vector<std::vector<Complex>> rows(n_max + 1);
  for (std::size_t n = 0; n <= n_max; ++n) {
    rows[n].assign(n + 1, Complex{});
    rows[n][n] = 1.0;
  }
  return TriangularArray(std::move(rows));
}

TriangularArray TriangularArray::cesaro(std::size_t n_max) {
  std::vector<std::vector<Complex>> rows(n_max + 1);
  for (std::size_t n = 0; n <= n_max; ++n) {
    rows[n].assign(n + 1, Complex(1.0 / static_cast<double>(n + 1)));
  }
  return TriangularArray(std::move(rows));
}

TriangularArray TriangularArray::vallee_poussin(std::size_t n_max) {
  std::vector<std::vector<Complex>> rows(n_max + 1);
  rows[0] = {Complex(1.0)};
  for (std::size_t n = 1; n <= n_max; ++n) {
    const std::size_t m = n / 2;
    rows[n].assign(n + 1, Complex{});
    const double w = 1.0 / static_cast<double>(n - m);
    for (std::size_t k = m + 1; k <= n; ++k) rows[n][k] = w;
  }
  return TriangularArray(std::move(rows));
}

TaylorPoly partial_sum(std::size_t n, const TaylorPoly& f) {
  return f.resized(std::min(n + 1, f.size()));
}

TaylorPoly cesaro(std::size_t n, const TaylorPoly& f) {
  const std::size_t len = std::min(n + 1, f.size());
  std::vector<Complex> c(len);
  const double denom = static_cast<double>(n + 1);
  for (std::size_t k = 0; k < len; ++k) {
    c[k] = f[k] * (static_cast<double>(n + 1 - k) / denom);
  }
  return TaylorPoly(std::move(c));
}

TaylorPoly cesaro_by_averaging(std::size_t n, const TaylorPoly& f) {
  TaylorPoly sum;
  for (std::size_t k = 0; k <= n; ++k) sum = add(sum, partial_sum(k, f));
  return scale(1.0 / static_cast<double>(n + 1), sum);
}

TaylorPoly apply_array(const TriangularArray& a, std::size_t n, const TaylorPoly& f) {
  const auto m = a.multipliers(n);
  const std::size_t len = std::min(n + 1, f.size());
  std::vector<Complex> c(len);
  for (std::size_t k = 0; k < len; ++k) c[k] = m[k] * f[k];
  return TaylorPoly(std::move(c));
}

TaylorPoly gram_projection(const SpaceHandle& space, std::size_t n,
                           const TaylorPoly& f) {
  const GramMatrix& g = space.gram_matrix();
  if (n > space.horizon()) {
    throw Error(ErrorKind::kDegreeExceedsHorizon,
                "projection degree " + std::to_string(n) + " beyond horizon " +
                    std::to_string(space.horizon()));
  }
  const Eigen::VectorXcd fv = coefficient_vector(f, g.size());
  const auto rows = static_cast<Eigen::Index>(n + 1);
  // rhs_j = <z^j, f> = (G f)_j.
  const Eigen::VectorXcd rhs = g.matrix().topRows(rows) * fv;
  const Eigen::VectorXcd x = g.solve_leading(n, rhs);
  return TaylorPoly(std::vector<Complex>(x.data(), x.data() + x.size()));
}

Scheme Scheme::array(TriangularArray a) {
  return Scheme(ArrayScheme{std::make_shared<const TriangularArray>(std::move(a))});
}

Scheme Scheme::projection(SpaceHandle space) {
  if (!space.is_hilbert()) {
    throw Error(ErrorKind::kNotAHilbertSpace,
                "projection scheme needs a Hilbert space, got " + space.describe());
  }
  return Scheme(ProjectionScheme{std::move(space)});
}

Scheme Scheme::from_approximants(SpaceHandle space, std::vector<std::size_t> degrees) {
  if (degrees.empty()) {
    throw Error(ErrorKind::kInvalidArgument, "approximant scheme needs degrees");
  }
  return Scheme(ApproximantScheme{std::move(space), std::move(degrees)});
}

std::string Scheme::name() const {
  return std::visit(
      [](const auto& k) -> std::string {
        using T = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<T, PartialSumScheme>) return "partial";
        if constexpr (std::is_same_v<T, CesaroScheme>) return "cesaro";
        if constexpr (std::is_same_v<T, ArrayScheme>) return "array";
        if constexpr (std::is_same_v<T, ProjectionScheme>) return "projection";
        if constexpr (std::is_same_v<T, ApproximantScheme>) return "approximants";
      },
      kind_);
}

std::size_t Scheme::approximant_degree(std::size_t n) const {
  if (std::holds_alternative<ProjectionScheme>(kind_)) return n;
  const auto* a = std::get_if<ApproximantScheme>(&kind_);
  if (!a) return n;
  // Latest certified stage k with d(k) <= n; d is nondecreasing and d(0) = 0.
  std::size_t best = 0;
  for (std::size_t k = 0; k < a->degrees.size(); ++k) {
    if (a->degrees[k] <= n) best = a->degrees[k];
  }
  return best;
}

TaylorPoly Scheme::apply(std::size_t n, const TaylorPoly& f) const {
  return std::visit(
      [&](const auto& k) -> TaylorPoly {
        using T = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<T, PartialSumScheme>) return polyapprox::partial_sum(n, f);
        if constexpr (std::is_same_v<T, CesaroScheme>) return polyapprox::cesaro(n, f);
        if constexpr (std::is_same_v<T, ArrayScheme>) return apply_array(*k.array, n, f);
        if constexpr (std::is_same_v<T, ProjectionScheme>) {
          return gram_projection(k.space, std::min(n, k.space.horizon()), f);
        }
        if constexpr (std::is_same_v<T, ApproximantScheme>) {
          return gram_projection(k.space, approximant_degree(n), f);
        }
      },
      kind_);
}

std::optional<std::vector<Complex>> Scheme::multipliers(std::size_t n) const {
  if (std::holds_alternative<PartialSumScheme>(kind_)) {
    return std::vector<Complex>(n + 1, Complex(1.0));
  }
  if (std::holds_alternative<CesaroScheme>(kind_)) {
    std::vector<Complex> m(n + 1);
    for (std::size_t k = 0; k <= n; ++k) {
      m[k] = 1.0 - static_cast<double>(k) / static_cast<double>(n + 1);
    }
    return m;
  }
  if (const auto* a = std::get_if<ArrayScheme>(&kind_)) return a->array->multipliers(n);
  return std::nullopt;
}

SchemeBuild build_scheme_from_approximants(const SpaceHandle& space,
                                           const std::vector<TaylorPoly>& dense_sample,
                                           double bound, std::size_t n_max) {
  if (!space.is_hilbert()) {
    throw Error(ErrorKind::kNotAHilbertSpace,
                "approximant builder needs a Hilbert space, got " + space.describe());
  }
  if (dense_sample.empty()) {
    throw Error(ErrorKind::kInvalidArgument, "dense sample is empty");
  }
  if (!(bound >= 1.0)) {
    throw Error(ErrorKind::kInvalidArgument, "norm bound M must be >= 1");
  }
  const std::size_t horizon = space.horizon();

  // Residual table r[j][d] = ||P_d y_j - y_j||, filled lazily; nonincreasing in d.
  std::vector<std::vector<double>> residual(dense_sample.size());
  const auto residual_at = [&](std::size_t j, std::size_t d) {
    auto& row = residual[j];
    while (row.size() <= d) {
      const std::size_t deg = row.size();
      const TaylorPoly p = gram_projection(space, deg, dense_sample[j]);
      row.push_back(space.norm(subtract(p, dense_sample[j])));
    }
    return row[d];
  };

  SchemeCertificate cert;
  cert.bound = 1.0;  // orthogonal projections are contractions
  cert.dense_sample = dense_sample;
  std::size_t d = 0;
  for (std::size_t n = 0; n <= n_max; ++n) {
    const std::size_t count = std::min(n + 1, dense_sample.size());
    const double target = 1.0 / static_cast<double>(n + 1);
    const auto worst = [&](std::size_t deg) {
      double w = 0.0;
      for (std::size_t j = 0; j < count; ++j) w = std::max(w, residual_at(j, deg));
      return w;
    };
    // Targets shrink and the sample grows, so d(n) never decreases.
    while (worst(d) > target) {
      if (d == horizon) {
        throw Error(ErrorKind::kHorizonExhausted,
                    "no projection degree <= " + std::to_string(horizon) +
                        " reaches residual " + std::to_string(target) + " at n = " +
                        std::to_string(n));
      }
      ++d;
    }
    cert.degrees.push_back(d);
    cert.residuals.push_back(worst(d));
    cert.sample_counts.push_back(count);
  }
  return {Scheme::from_approximants(space, cert.degrees), std::move(cert)};
}

std::vector<SchemeReport> scheme_error_curve(const Scheme& scheme,
                                             const SpaceHandle& space,
                                             const TaylorPoly& f, std::size_t n_max) {
  if (n_max > space.horizon()) {
    throw Error(ErrorKind::kDegreeExceedsHorizon,
                "n_max " + std::to_string(n_max) + " beyond horizon " +
                    std::to_string(space.horizon()));
  }
  std::vector<SchemeReport> out;
  out.reserve(n_max + 1);
  for (std::size_t n = 0; n <= n_max; ++n) {
    const TaylorPoly t = scheme.apply(n, f);
    SchemeReport r;
    r.n = n;
    r.image_norm = space.norm(t);
    r.error_norm = space.norm(subtract(t, f));
    r.degree = t.degree();
    out.push_back(r);
  }
  return out;
}

}  // namespace polyapprox
