#include "polyapprox/series.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "polyapprox/errors.hpp"

namespace polyapprox {

namespace {

bool is_finite(Complex c) {
  return std::isfinite(c.real()) && std::isfinite(c.imag());
}

}  // namespace

TaylorPoly::TaylorPoly(std::vector<Complex> coeffs)
    : coeffs_(std::move(coeffs)) {
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (!is_finite(coeffs_[k])) {
      throw Error(ErrorKind::kNonFiniteValue,
                  "coefficient " + std::to_string(k) + " is not finite");
    }
  }
}

TaylorPoly::TaylorPoly(std::initializer_list<Complex> coeffs)
    : TaylorPoly(std::vector<Complex>(coeffs)) {}

TaylorPoly TaylorPoly::constant(Complex c) { return TaylorPoly({c}); }

TaylorPoly TaylorPoly::monomial(std::size_t n, Complex c) {
  std::vector<Complex> coeffs(n + 1);
  coeffs[n] = c;
  return TaylorPoly(std::move(coeffs));
}

std::optional<std::size_t> TaylorPoly::degree() const {
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    if (coeffs_[k] != Complex{}) return k;
  }
  return std::nullopt;
}

TaylorPoly TaylorPoly::trimmed() const {
  auto d = degree();
  return resized(d ? *d + 1 : 0);
}

TaylorPoly TaylorPoly::resized(std::size_t length) const {
  TaylorPoly out;
  out.coeffs_.assign(length, Complex{});
  std::copy_n(coeffs_.begin(), std::min(length, coeffs_.size()),
              out.coeffs_.begin());
  return out;
}

bool operator==(const TaylorPoly& p, const TaylorPoly& q) {
  const std::size_t n = std::max(p.size(), q.size());
  for (std::size_t k = 0; k < n; ++k) {
    if (p[k] != q[k]) return false;
  }
  return true;
}

TaylorPoly add(const TaylorPoly& p, const TaylorPoly& q) {
  std::vector<Complex> out(std::max(p.size(), q.size()));
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = p[k] + q[k];
  return TaylorPoly(std::move(out));
}

TaylorPoly subtract(const TaylorPoly& p, const TaylorPoly& q) {
  std::vector<Complex> out(std::max(p.size(), q.size()));
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = p[k] - q[k];
  return TaylorPoly(std::move(out));
}

TaylorPoly scale(Complex c, const TaylorPoly& p) {
  std::vector<Complex> out(p.coeffs().begin(), p.coeffs().end());
  for (auto& x : out) x *= c;
  return TaylorPoly(std::move(out));
}

TaylorPoly multiply(const TaylorPoly& p, const TaylorPoly& q) {
  const auto dp = p.degree();
  const auto dq = q.degree();
  if (!dp || !dq) return TaylorPoly();
  std::vector<Complex> out(*dp + *dq + 1);
  for (std::size_t i = 0; i <= *dp; ++i) {
    if (p[i] == Complex{}) continue;
    for (std::size_t j = 0; j <= *dq; ++j) out[i + j] += p[i] * q[j];
  }
  return TaylorPoly(std::move(out));
}

Complex evaluate(const TaylorPoly& p, Complex z) {
  Complex result{};
  const auto c = p.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) result = result * z + *it;
  return result;
}

double max_coeff_distance(const TaylorPoly& p, const TaylorPoly& q) {
  double dist = 0.0;
  const std::size_t n = std::max(p.size(), q.size());
  for (std::size_t k = 0; k < n; ++k) dist = std::max(dist, std::abs(p[k] - q[k]));
  return dist;
}

CircleGrid::CircleGrid(std::size_t m) : m_(m) {
  if (m == 0) throw Error(ErrorKind::kInvalidArgument, "CircleGrid needs m >= 1");
}

Complex CircleGrid::node(std::size_t j) const {
  j %= m_;
  // Fold into the first octant so quarter and half turns come out exact.
  const std::size_t four_j = 4 * j;
  if (four_j % m_ == 0) {
    switch (four_j / m_) {
      case 0: return {1.0, 0.0};
      case 1: return {0.0, 1.0};
      case 2: return {-1.0, 0.0};
      default: return {0.0, -1.0};
    }
  }
  const double theta = 2.0 * std::numbers::pi * static_cast<double>(j) /
                       static_cast<double>(m_);
  return {std::cos(theta), std::sin(theta)};
}

std::vector<Complex> sample_on_circle(const TaylorPoly& p,
                                      const CircleGrid& grid) {
  std::vector<Complex> values(grid.size());
  for (std::size_t j = 0; j < grid.size(); ++j) {
    values[j] = evaluate(p, grid.node(j));
  }
  return values;
}

double max_modulus_on(const TaylorPoly& p, const CircleGrid& grid) {
  double best = 0.0;
  for (std::size_t j = 0; j < grid.size(); ++j) {
    best = std::max(best, std::abs(evaluate(p, grid.node(j))));
  }
  return best;
}

}  // namespace polyapprox
