#pragma once

#include <cstddef>
#include <vector>

#include "polyapprox/gram.hpp"
#include "polyapprox/series.hpp"

namespace polyapprox::hb {

// A polynomial symbol b with |b| <= 1 on the circle and 1 - |b|^2 not
// identically zero (b is a non-extreme point of the unit ball of H^infinity).
class SymbolB {
 public:
  // Throws kNotContractive if sampled |b| exceeds 1 + 1e-12, and
  // kDegenerateSymbol if 1 - |b|^2 vanishes identically.
  explicit SymbolB(TaylorPoly b);

  const TaylorPoly& poly() const { return b_; }
  std::size_t degree() const;

 private:
  TaylorPoly b_;
};

// Outer polynomial a with |a|^2 + |b|^2 = 1 on the circle and a(0) > 0.
struct PythagoreanMate {
  TaylorPoly a;
};

// Laurent coefficients h_{-d..d} of 1 - |b(e^{it})|^2, returned as the
// nonnegative-index half h_0..h_d (h_{-k} = conj(h_k)).
std::vector<Complex> defect_coefficients(const TaylorPoly& b);

// Spectral factorization of 1 - |b|^2 by root finding on its Laurent
// polynomial: roots outside the circle are kept, roots on the circle are
// paired and taken once.
PythagoreanMate fejer_riesz_mate(const SymbolB& b);

// max over a grid of ||a|^2 + |b|^2 - 1|.
double pythagorean_defect(const TaylorPoly& a, const TaylorPoly& b,
                          std::size_t grid_size);

// Solves the truncated Toeplitz system T_conj(a) f_plus = T_conj(b) f of size
// `working` by back substitution. Returns the first `working` coefficients of
// f_plus.
std::vector<Complex> solve_companion(const TaylorPoly& a, const TaylorPoly& b,
                                     const TaylorPoly& f, std::size_t working);

// 1-norm condition number of the truncated W x W matrix T_conj(a).
double toeplitz_condition(const TaylorPoly& a, std::size_t working);

struct HbOptions {
  std::size_t horizon = 16;
  std::size_t working_factor = 4;
};

// Everything needed to evaluate the H(b) norm on polynomials of degree at
// most `horizon`:
//
//   ||f||_b^2 = ||f||_2^2 + ||f_plus||_2^2,   T_conj(a) f_plus = T_conj(b) f.
class HbDescriptor {
 public:
  HbDescriptor(SymbolB b, PythagoreanMate a, std::size_t horizon,
               std::size_t working, std::vector<std::vector<Complex>> companions,
               GramMatrix gram, double condition);

  const SymbolB& symbol() const { return b_; }
  const PythagoreanMate& mate() const { return a_; }
  std::size_t horizon() const { return horizon_; }
  std::size_t working_horizon() const { return working_; }
  const GramMatrix& gram() const { return gram_; }
  double condition() const { return condition_; }

  // (z^j)_plus, trimmed of trailing zeros.
  const std::vector<Complex>& companion(std::size_t j) const {
    return companions_.at(j);
  }

  // f_plus for a polynomial of degree <= horizon, by linearity.
  std::vector<Complex> companion_of(const TaylorPoly& f) const;

  double norm(const TaylorPoly& f) const;
  // Conjugate-linear in f.
  Complex inner(const TaylorPoly& f, const TaylorPoly& g) const;

 private:
  SymbolB b_;
  PythagoreanMate a_;
  std::size_t horizon_;
  std::size_t working_;
  std::vector<std::vector<Complex>> companions_;
  GramMatrix gram_;
  double condition_;
};

// Throws kIllConditionedMate if the Toeplitz condition estimate exceeds 1e12.
HbDescriptor hb_gram(const SymbolB& b, const HbOptions& options);
HbDescriptor hb_gram(const SymbolB& b, std::size_t horizon,
                     std::size_t working_factor = 4);

// <z^j, z^k>_b = delta_jk + <(z^j)_plus, (z^k)_plus>_2 evaluated directly,
// without polarization.
Complex direct_gram_entry(const HbDescriptor& d, std::size_t j, std::size_t k);

struct DensityReport {
  double integral;  // approx. of int_0^{2pi} log(1 - |b|^2) dt; -inf if 1-|b|^2 vanishes on a node
  std::vector<double> refinements;  // values on successively doubled grids
  bool likely_dense;
  double floor = -1e6;
};

// Midpoint-rule quadrature of log(1 - |b|^2) on three doubled grids. A trend
// diagnostic only. Accepts any polynomial, including inner ones.
DensityReport hb_density_diagnostic(const TaylorPoly& b,
                                    std::size_t base_points = 0);

}  // namespace polyapprox::hb
