#include "polyapprox/hb.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "polyapprox/errors.hpp"

namespace polyapprox::hb {

namespace {

constexpr double kContractiveSlack = 1e-12;
constexpr double kDefectZero = 1e-14;
constexpr double kCircleBand = 1e-6;
constexpr double kMaxCondition = 1e12;
constexpr double kMateTolerance = 1e-8;

std::size_t symbol_grid_size(const TaylorPoly& b) {
  const auto d = b.degree().value_or(0);
  return std::max<std::size_t>(256, 64 * (d + 1));
}

// Value of 1 - |b|^2 at angle theta.
double defect_at(const TaylorPoly& b, double theta) {
  const Complex v = evaluate(b, std::polar(1.0, theta));
  return 1.0 - std::norm(v);
}

// p(z) and p'(z) by Horner.
std::pair<Complex, Complex> eval_with_derivative(std::span<const Complex> c,
                                                 Complex z) {
  Complex p{}, dp{};
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    dp = dp * z + p;
    p = p * z + *it;
  }
  return {p, dp};
}

Complex newton_polish(std::span<const Complex> c, Complex z, int steps) {
  for (int i = 0; i < steps; ++i) {
    auto [p, dp] = eval_with_derivative(c, z);
    if (dp == Complex{}) break;
    const Complex next = z - p / dp;
    if (!std::isfinite(next.real()) || !std::isfinite(next.imag())) break;
    if (std::abs(eval_with_derivative(c, next).first) > std::abs(p)) break;
    z = next;
  }
  return z;
}

std::vector<Complex> derivative(std::span<const Complex> c) {
  std::vector<Complex> d;
  for (std::size_t k = 1; k < c.size(); ++k) d.push_back(static_cast<double>(k) * c[k]);
  return d;
}

std::vector<Complex> polynomial_roots(std::span<const Complex> c) {
  const auto n = static_cast<Eigen::Index>(c.size() - 1);
  Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(n, n);
  for (Eigen::Index i = 1; i < n; ++i) companion(i, i - 1) = 1.0;
  for (Eigen::Index i = 0; i < n; ++i) {
    companion(i, n - 1) = -c[static_cast<std::size_t>(i)] / c.back();
  }
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(companion, false);
  std::vector<Complex> roots(solver.eigenvalues().data(),
                             solver.eigenvalues().data() + n);
  for (auto& r : roots) r = newton_polish(c, r, 8);
  return roots;
}

}  // namespace

SymbolB::SymbolB(TaylorPoly b) : b_(b.trimmed()) {
  const CircleGrid grid(symbol_grid_size(b_));
  const double sup = max_modulus_on(b_, grid);
  if (sup > 1.0 + kContractiveSlack) {
    throw Error(ErrorKind::kNotContractive,
                "sampled sup |b| = " + std::to_string(sup) + " exceeds 1");
  }
  const auto h = defect_coefficients(b_);
  const bool vanishes = std::all_of(h.begin(), h.end(), [](Complex x) {
    return std::abs(x) <= kDefectZero;
  });
  if (vanishes) {
    throw Error(ErrorKind::kDegenerateSymbol, "1 - |b|^2 vanishes identically");
  }
}

std::size_t SymbolB::degree() const { return b_.degree().value_or(0); }

std::vector<Complex> defect_coefficients(const TaylorPoly& b) {
  const std::size_t d = b.degree().value_or(0);
  std::vector<Complex> h(d + 1);
  for (std::size_t k = 0; k <= d; ++k) {
    Complex s{};
    for (std::size_t j = 0; j + k <= d; ++j) s += b[j + k] * std::conj(b[j]);
    h[k] = -s;
  }
  h[0] += 1.0;
  return h;
}

PythagoreanMate fejer_riesz_mate(const SymbolB& symbol) {
  const TaylorPoly& b = symbol.poly();
  const auto h = defect_coefficients(b);

  std::size_t e = 0;
  for (std::size_t k = h.size(); k-- > 1;) {
    if (std::abs(h[k]) > kDefectZero) {
      e = k;
      break;
    }
  }
  if (e == 0) {
    if (h[0].real() <= 0.0) {
      throw Error(ErrorKind::kDegenerateSymbol, "1 - |b|^2 is not positive");
    }
    return {TaylorPoly::constant(std::sqrt(h[0].real()))};
  }

  // z^e h(z), degree 2e, with h_{-k} = conj(h_k).
  std::vector<Complex> laurent(2 * e + 1);
  for (std::size_t i = 0; i <= 2 * e; ++i) {
    laurent[i] = i >= e ? h[i - e] : std::conj(h[e - i]);
  }
  const auto roots = polynomial_roots(laurent);

  std::vector<Complex> kept;
  std::vector<Complex> on_circle;
  for (const Complex& r : roots) {
    const double gap = std::abs(r) - 1.0;
    if (gap > kCircleBand) {
      kept.push_back(r);
    } else if (gap >= -kCircleBand) {
      on_circle.push_back(r);
    }
  }
  if (on_circle.size() % 2 != 0) {
    throw Error(ErrorKind::kNotContractive,
                "1 - |b|^2 changes sign on the circle (odd boundary multiplicity)");
  }
  // Boundary zeros of a nonnegative trigonometric polynomial have even
  // multiplicity: pair neighbours by angle, refine the pair on the
  // derivative, and keep one copy.
  std::sort(on_circle.begin(), on_circle.end(),
            [](Complex x, Complex y) { return std::arg(x) < std::arg(y); });
  const auto dlaurent = derivative(laurent);
  for (std::size_t i = 0; i < on_circle.size(); i += 2) {
    Complex mid = 0.5 * (on_circle[i] + on_circle[i + 1]);
    mid = newton_polish(dlaurent, mid, 12);
    kept.push_back(mid / std::abs(mid));
  }
  if (kept.size() != e) {
    throw Error(ErrorKind::kIllConditionedMate,
                "root split produced degree " + std::to_string(kept.size()) +
                    ", expected " + std::to_string(e));
  }

  TaylorPoly a = TaylorPoly::constant(1.0);
  for (const Complex& r : kept) a = multiply(a, TaylorPoly({-r, 1.0}));

  // Parseval: mean of |a|^2 on the circle is sum |a_k|^2, and the mean of
  // 1 - |b|^2 is h_0.
  double energy = 0.0;
  for (Complex c : a.coeffs()) energy += std::norm(c);
  const double modulus = std::sqrt(h[0].real() / energy);
  const Complex phase = std::conj(a[0]) / std::abs(a[0]);
  a = scale(modulus * phase, a);

  std::vector<Complex> coeffs(a.coeffs().begin(), a.coeffs().end());
  coeffs[0] = Complex(coeffs[0].real(), 0.0);
  a = TaylorPoly(std::move(coeffs));

  const double defect = pythagorean_defect(a, b, symbol_grid_size(b));
  if (defect > kMateTolerance) {
    throw Error(ErrorKind::kIllConditionedMate,
                "|a|^2 + |b|^2 - 1 reaches " + std::to_string(defect));
  }
  return {a};
}

double pythagorean_defect(const TaylorPoly& a, const TaylorPoly& b,
                          std::size_t grid_size) {
  const CircleGrid grid(grid_size);
  double worst = 0.0;
  for (std::size_t j = 0; j < grid.size(); ++j) {
    const Complex z = grid.node(j);
    const double s = std::norm(evaluate(a, z)) + std::norm(evaluate(b, z));
    worst = std::max(worst, std::abs(s - 1.0));
  }
  return worst;
}

std::vector<Complex> solve_companion(const TaylorPoly& a, const TaylorPoly& b,
                                     const TaylorPoly& f, std::size_t working) {
  const std::size_t da = a.degree().value_or(0);
  const std::size_t db = b.degree().value_or(0);
  std::vector<Complex> rhs(working);
  // (T_conj(b) f)_i = sum_k conj(b_k) f_{i+k}.
  for (std::size_t i = 0; i < working; ++i) {
    Complex s{};
    for (std::size_t k = 0; k <= db && i + k < f.size(); ++k) {
      s += std::conj(b[k]) * f[i + k];
    }
    rhs[i] = s;
  }
  // Upper-triangular banded: (T_conj(a))_{i,j} = conj(a_{j-i}).
  std::vector<Complex> x(working);
  const Complex pivot = std::conj(a[0]);
  for (std::size_t i = working; i-- > 0;) {
    Complex s = rhs[i];
    for (std::size_t k = 1; k <= da && i + k < working; ++k) {
      s -= std::conj(a[k]) * x[i + k];
    }
    x[i] = s / pivot;
  }
  return x;
}

double toeplitz_condition(const TaylorPoly& a, std::size_t working) {
  const std::size_t da = a.degree().value_or(0);
  double forward = 0.0;
  for (std::size_t k = 0; k <= da && k < working; ++k) forward += std::abs(a[k]);
  // The inverse of a triangular Toeplitz truncation is the truncation of
  // T_conj(1/a); its largest column sum is sum_{k<W} |(1/a)_k|.
  std::vector<Complex> inv(working);
  double backward = 0.0;
  for (std::size_t n = 0; n < working; ++n) {
    Complex s = n == 0 ? Complex(1.0) : Complex{};
    for (std::size_t k = 1; k <= std::min(n, da); ++k) s -= a[k] * inv[n - k];
    inv[n] = s / a[0];
    backward += std::abs(inv[n]);
    if (!std::isfinite(backward)) return std::numeric_limits<double>::infinity();
  }
  return forward * backward;
}

HbDescriptor::HbDescriptor(SymbolB b, PythagoreanMate a, std::size_t horizon,
                           std::size_t working,
                           std::vector<std::vector<Complex>> companions,
                           GramMatrix gram, double condition)
    : b_(std::move(b)),
      a_(std::move(a)),
      horizon_(horizon),
      working_(working),
      companions_(std::move(companions)),
      gram_(std::move(gram)),
      condition_(condition) {}

std::vector<Complex> HbDescriptor::companion_of(const TaylorPoly& f) const {
  const auto d = f.degree();
  if (d && *d > horizon_) {
    throw Error(ErrorKind::kDegreeExceedsHorizon,
                "degree " + std::to_string(*d) + " exceeds H(b) horizon " +
                    std::to_string(horizon_));
  }
  auto x = solve_companion(a_.a, b_.poly(), f, working_);
  std::size_t len = x.size();
  while (len > 0 && x[len - 1] == Complex{}) --len;
  x.resize(len);
  return x;
}

double HbDescriptor::norm(const TaylorPoly& f) const {
  const auto plus = companion_of(f);
  double s = 0.0;
  for (Complex c : f.coeffs()) s += std::norm(c);
  for (Complex c : plus) s += std::norm(c);
  return std::sqrt(s);
}

Complex HbDescriptor::inner(const TaylorPoly& f, const TaylorPoly& g) const {
  const auto fp = companion_of(f);
  const auto gp = companion_of(g);
  Complex s{};
  for (std::size_t k = 0; k < std::min(f.size(), g.size()); ++k) {
    s += std::conj(f[k]) * g[k];
  }
  for (std::size_t k = 0; k < std::min(fp.size(), gp.size()); ++k) {
    s += std::conj(fp[k]) * gp[k];
  }
  return s;
}

namespace {

// ||x + t y||_2^2 over two trimmed coefficient vectors.
double combo_norm2(const std::vector<Complex>& x, const std::vector<Complex>& y,
                   Complex t) {
  double s = 0.0;
  const std::size_t n = std::max(x.size(), y.size());
  for (std::size_t k = 0; k < n; ++k) {
    const Complex xv = k < x.size() ? x[k] : Complex{};
    const Complex yv = k < y.size() ? y[k] : Complex{};
    s += std::norm(xv + t * yv);
  }
  return s;
}

}  // namespace

HbDescriptor hb_gram(const SymbolB& b, const HbOptions& options) {
  if (options.working_factor < 1) {
    throw Error(ErrorKind::kInvalidArgument, "working_factor must be >= 1");
  }
  const std::size_t n = options.horizon;
  const std::size_t working = options.working_factor * (n + 1);
  auto mate = fejer_riesz_mate(b);

  const double condition = toeplitz_condition(mate.a, working);
  if (!(condition <= kMaxCondition)) {
    throw Error(ErrorKind::kIllConditionedMate,
                "Toeplitz condition estimate " + std::to_string(condition) +
                    " exceeds 1e12 at working horizon " + std::to_string(working));
  }

  std::vector<std::vector<Complex>> companions(n + 1);
  for (std::size_t j = 0; j <= n; ++j) {
    auto x = solve_companion(mate.a, b.poly(), TaylorPoly::monomial(j), working);
    std::size_t len = x.size();
    while (len > 0 && x[len - 1] == Complex{}) --len;
    x.resize(len);
    companions[j] = std::move(x);
  }

  // Polarization, conjugate-linear in the first slot:
  //   <x,y> = ((|x+y|^2 - |x-y|^2) - i(|x+iy|^2 - |x-iy|^2)) / 4.
  const auto dim = static_cast<Eigen::Index>(n + 1);
  Eigen::MatrixXcd g(dim, dim);
  const Complex i1(0.0, 1.0);
  for (std::size_t j = 0; j <= n; ++j) {
    const auto& fj = companions[j];
    g(j, j) = 1.0 + combo_norm2(fj, {}, 0.0);
    for (std::size_t k = j + 1; k <= n; ++k) {
      const auto& fk = companions[k];
      // The H^2 parts of z^j + t z^k contribute 2 in each term and cancel.
      const double re = combo_norm2(fj, fk, 1.0) - combo_norm2(fj, fk, -1.0);
      const double im = combo_norm2(fj, fk, i1) - combo_norm2(fj, fk, -i1);
      const Complex entry = 0.25 * Complex(re, -im);
      g(j, k) = entry;
      g(k, j) = std::conj(entry);
    }
  }
  return HbDescriptor(b, std::move(mate), n, working, std::move(companions),
                      GramMatrix(std::move(g)), condition);
}

HbDescriptor hb_gram(const SymbolB& b, std::size_t horizon,
                     std::size_t working_factor) {
  return hb_gram(b, HbOptions{horizon, working_factor});
}

Complex direct_gram_entry(const HbDescriptor& d, std::size_t j, std::size_t k) {
  const auto& x = d.companion(j);
  const auto& y = d.companion(k);
  Complex s = j == k ? Complex(1.0) : Complex{};
  for (std::size_t i = 0; i < std::min(x.size(), y.size()); ++i) {
    s += std::conj(x[i]) * y[i];
  }
  return s;
}

DensityReport hb_density_diagnostic(const TaylorPoly& b, std::size_t base_points) {
  const std::size_t d = b.degree().value_or(0);
  const std::size_t m0 = base_points > 0 ? base_points : 256 * (d + 1);
  DensityReport report{};
  for (std::size_t level = 0; level < 3; ++level) {
    const std::size_t m = m0 << level;
    const double step = 2.0 * std::numbers::pi / static_cast<double>(m);
    double sum = 0.0;
    for (std::size_t j = 0; j < m; ++j) {
      const double h = defect_at(b, step * (static_cast<double>(j) + 0.5));
      if (h <= kDefectZero) {
        sum = -std::numeric_limits<double>::infinity();
        break;
      }
      sum += std::log(h);
    }
    report.refinements.push_back(step * sum);
  }
  const auto& r = report.refinements;
  report.integral = r.back();
  const bool finite = std::isfinite(report.integral);
  const bool stable =
      finite && std::abs(r[2] - r[1]) <= 1e-2 * std::max(1.0, std::abs(r[2]));
  report.likely_dense = finite && stable && report.integral > report.floor;
  return report;
}

}  // namespace polyapprox::hb
