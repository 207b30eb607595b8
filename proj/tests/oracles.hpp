#pragma once

// Independent reference computations for the test suites.

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <vector>

#include "polyapprox/series.hpp"

namespace oracle {

using polyapprox::Complex;
using polyapprox::TaylorPoly;

inline TaylorPoly random_poly(std::mt19937_64& rng, std::size_t degree, double scale = 1.0) {
  std::normal_distribution<double> g;
  std::vector<Complex> c(degree + 1);
  for (auto& v : c) v = scale * Complex(g(rng), g(rng));
  return TaylorPoly(std::move(c));
}

// Dense W x W Toeplitz matrix with (T)_{ij} = conj(s_{j-i}) for j >= i.
inline Eigen::MatrixXcd upper_toeplitz_conj(const TaylorPoly& s, std::size_t w) {
  const auto n = static_cast<Eigen::Index>(w);
  Eigen::MatrixXcd t = Eigen::MatrixXcd::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = i; j < n; ++j) t(i, j) = std::conj(s[static_cast<std::size_t>(j - i)]);
  }
  return t;
}

// H(b) Gram from a dense LU solve: G = I + X^* X with X = T_conj(a)^{-1} T_conj(b)
// restricted to the first horizon + 1 columns.
inline Eigen::MatrixXcd hb_gram_dense(const TaylorPoly& a, const TaylorPoly& b,
                                      std::size_t horizon, std::size_t working) {
  const Eigen::MatrixXcd ta = upper_toeplitz_conj(a, working);
  const Eigen::MatrixXcd tb = upper_toeplitz_conj(b, working);
  const auto cols = static_cast<Eigen::Index>(horizon + 1);
  const Eigen::MatrixXcd x = ta.partialPivLu().solve(tb.leftCols(cols));
  return Eigen::MatrixXcd::Identity(cols, cols) + x.adjoint() * x;
}

// (1/2pi) int |sum_{k<=n} e^{ikt}| dt by the midpoint rule on q nodes.
inline double lebesgue_midpoint(std::size_t n, std::size_t q) {
  double s = 0.0;
  for (std::size_t j = 0; j < q; ++j) {
    const double t = 2.0 * std::numbers::pi * (static_cast<double>(j) + 0.5) / static_cast<double>(q);
    s += std::abs(std::sin(0.5 * static_cast<double>(n + 1) * t) / std::sin(0.5 * t));
  }
  return s / static_cast<double>(q);
}

// max |f| over a fine grid of the circle of radius r.
inline double sup_on_circle(const TaylorPoly& f, double r, std::size_t q) {
  double best = 0.0;
  for (std::size_t j = 0; j < q; ++j) {
    const double t = 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(q);
    best = std::max(best, std::abs(polyapprox::evaluate(f, std::polar(r, t))));
  }
  return best;
}

}  // namespace oracle
