#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

namespace polyapprox {

using Complex = std::complex<double>;

// A polynomial (equivalently, a truncated power series) on the unit disk,
//
//   p(z) = c_0 + c_1 z + ... + c_d z^d,
//
// stored densely in increasing order of degree. Trailing zeros may be
// present in storage; they never affect degree() or equality.
class TaylorPoly {
 public:
  // The zero polynomial.
  TaylorPoly() = default;

  // Throws Error(kNonFiniteValue) if any coefficient is NaN or infinite.
  explicit TaylorPoly(std::vector<Complex> coeffs);
  TaylorPoly(std::initializer_list<Complex> coeffs);

  static TaylorPoly constant(Complex c);
  static TaylorPoly monomial(std::size_t n, Complex c = 1.0);

  // Largest index with a nonzero coefficient; nullopt for the zero polynomial.
  std::optional<std::size_t> degree() const;
  bool is_zero() const { return !degree().has_value(); }

  // Number of stored coefficients (may exceed degree() + 1).
  std::size_t size() const { return coeffs_.size(); }

  // Coefficient c_k; zero beyond storage.
  Complex operator[](std::size_t k) const {
    return k < coeffs_.size() ? coeffs_[k] : Complex{};
  }

  std::span<const Complex> coeffs() const { return coeffs_; }

  // Copy with storage trimmed to degree() + 1 (empty for zero).
  TaylorPoly trimmed() const;

  // Copy with storage resized to exactly `length` coefficients, dropping or
  // zero-padding at the top. Truncation is the partial-sum operator.
  TaylorPoly resized(std::size_t length) const;

  friend bool operator==(const TaylorPoly& p, const TaylorPoly& q);

 private:
  std::vector<Complex> coeffs_;
};

TaylorPoly add(const TaylorPoly& p, const TaylorPoly& q);
TaylorPoly subtract(const TaylorPoly& p, const TaylorPoly& q);
TaylorPoly scale(Complex c, const TaylorPoly& p);
// Cauchy product.
TaylorPoly multiply(const TaylorPoly& p, const TaylorPoly& q);
// Horner evaluation.
Complex evaluate(const TaylorPoly& p, Complex z);

inline TaylorPoly operator+(const TaylorPoly& p, const TaylorPoly& q) {
  return add(p, q);
}
inline TaylorPoly operator-(const TaylorPoly& p, const TaylorPoly& q) {
  return subtract(p, q);
}
inline TaylorPoly operator*(Complex c, const TaylorPoly& p) {
  return scale(c, p);
}
inline TaylorPoly operator*(const TaylorPoly& p, const TaylorPoly& q) {
  return multiply(p, q);
}

// Largest coefficientwise modulus of p - q.
double max_coeff_distance(const TaylorPoly& p, const TaylorPoly& q);

// The m roots of unity exp(2 pi i j / m), j = 0..m-1. Nodes are computed on
// demand, never stored.
class CircleGrid {
 public:
  // Throws Error(kInvalidArgument) for m == 0.
  explicit CircleGrid(std::size_t m);

  std::size_t size() const { return m_; }
  Complex node(std::size_t j) const;

 private:
  std::size_t m_;
};

std::vector<Complex> sample_on_circle(const TaylorPoly& p,
                                      const CircleGrid& grid);

// max_j |p(node j)|.
double max_modulus_on(const TaylorPoly& p, const CircleGrid& grid);

}  // namespace polyapprox
