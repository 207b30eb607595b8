#include "polyapprox/diagnostics.hpp"

#include <Eigen/SVD>
#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <variant>

#include "polyapprox/errors.hpp"

namespace polyapprox::diagnostics {

namespace {

constexpr double kPi = std::numbers::pi;

// Gauss-Legendre nodes and weights on [-1, 1].
std::pair<std::vector<double>, std::vector<double>> gauss_legendre(std::size_t q) {
  std::vector<double> x(q), w(q);
  for (std::size_t i = 0; i < (q + 1) / 2; ++i) {
    double z = std::cos(kPi * (static_cast<double>(i) + 0.75) /
                        (static_cast<double>(q) + 0.5));
    double dp = 1.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = z;
      for (std::size_t k = 2; k <= q; ++k) {
        const double pk = ((2.0 * k - 1.0) * z * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = pk;
      }
      if (q == 1) p1 = z, p0 = 1.0;
      dp = static_cast<double>(q) * (z * p1 - p0) / (z * z - 1.0);
      const double dz = p1 / dp;
      z -= dz;
      if (std::abs(dz) < 1e-16) break;
    }
    x[i] = -z;
    x[q - 1 - i] = z;
    w[i] = w[q - 1 - i] = 2.0 / ((1.0 - z * z) * dp * dp);
  }
  return {x, w};
}

double dirichlet_modulus(std::size_t n, double t) {
  const double s = std::sin(0.5 * t);
  if (std::abs(s) < 1e-300) return static_cast<double>(n + 1);
  return std::abs(std::sin(0.5 * static_cast<double>(n + 1) * t) / s);
}

}  // namespace

double lebesgue_constant(std::size_t n, std::size_t quadrature_points) {
  if (quadrature_points < 64 * (n + 1)) {
    throw Error(ErrorKind::kInsufficientQuadrature,
                std::to_string(quadrature_points) + " points for n = " +
                    std::to_string(n) + "; need at least " + std::to_string(64 * (n + 1)));
  }
  if (n == 0) return 1.0;
  const std::size_t panels = n + 1;
  const std::size_t per_panel = quadrature_points / panels;
  const auto [x, w] = gauss_legendre(per_panel);
  const double width = 2.0 * kPi / static_cast<double>(panels);
  double total = 0.0;
  for (std::size_t p = 0; p < panels; ++p) {
    const double mid = width * (static_cast<double>(p) + 0.5);
    double s = 0.0;
    for (std::size_t i = 0; i < per_panel; ++i) {
      s += w[i] * dirichlet_modulus(n, mid + 0.5 * width * x[i]);
    }
    total += 0.5 * width * s;
  }
  return total / (2.0 * kPi);
}

double lebesgue_constant(std::size_t n) { return lebesgue_constant(n, 64 * (n + 1)); }

TaylorPoly fejer_block(std::size_t m) {
  std::vector<Complex> c(2 * m + 1);
  for (std::size_t k = 1; k <= m; ++k) {
    c[m - k] += 1.0 / static_cast<double>(k);
    c[m + k] -= 1.0 / static_cast<double>(k);
  }
  return TaylorPoly(std::move(c));
}

namespace {

std::vector<double> half_binomials(std::size_t m) {
  std::vector<double> a(m + 1);
  a[0] = 1.0;
  for (std::size_t k = 1; k <= m; ++k) {
    a[k] = a[k - 1] * (2.0 * static_cast<double>(k) - 1.0) / (2.0 * static_cast<double>(k));
  }
  return a;
}

}  // namespace

double landau_constant(std::size_t m) {
  double s = 0.0;
  for (double a : half_binomials(m)) s += a * a;
  return s;
}

TaylorPoly landau_block(std::size_t m, std::size_t degree) {
  const auto a = half_binomials(m);
  std::vector<Complex> c(degree + 1);
  for (std::size_t n = 0; n <= degree; ++n) {
    double s = n <= m ? a[m - n] : 0.0;
    for (std::size_t k = 1; k <= std::min(n, m); ++k) s -= a[k] * c[n - k].real();
    c[n] = s;
  }
  return TaylorPoly(std::move(c));
}

GlidingHump gliding_hump(std::size_t blocks, std::size_t base_degree,
                         std::size_t horizon) {
  if (blocks < 1) throw Error(ErrorKind::kInvalidArgument, "gliding hump needs blocks >= 1");
  if (base_degree < 2) {
    throw Error(ErrorKind::kInvalidArgument, "gliding hump needs base_degree >= 2");
  }
  GlidingHump out;
  std::size_t offset = 0;
  std::size_t order = 1;
  for (std::size_t j = 1; j <= blocks; ++j) {
    if (order > horizon / base_degree) {
      throw Error(ErrorKind::kHorizonExceeded,
                  "block " + std::to_string(j) + " does not fit horizon " +
                      std::to_string(horizon));
    }
    order *= base_degree;
    HumpBlock b;
    b.offset = offset;
    b.order = order;
    const double rank = static_cast<double>(blocks - j + 1);
    b.weight = 1.0 / (rank * rank);
    b.spike_index = offset + order;
    out.blocks.push_back(b);
    offset += 4 * order + 1;
  }
  const std::size_t degree = offset - 1;
  if (degree > horizon) {
    throw Error(ErrorKind::kHorizonExceeded,
                "gliding hump degree " + std::to_string(degree) + " exceeds horizon " +
                    std::to_string(horizon));
  }
  std::vector<Complex> c(degree + 1);
  for (const auto& b : out.blocks) {
    const TaylorPoly block = landau_block(b.order, 4 * b.order);
    for (std::size_t k = 0; k < block.size(); ++k) c[b.offset + k] += b.weight * block[k];
  }
  out.f = TaylorPoly(std::move(c));
  return out;
}

SupProfile sup_profile(const TaylorPoly& f, std::size_t oversampling,
                       std::optional<std::size_t> n_max) {
  SupProfile out;
  const std::size_t deg = f.degree().value_or(0);
  const std::size_t last = n_max.value_or(deg);
  const CircleGrid grid(oversampling * (deg + 1));
  const std::size_t m = grid.size();
  std::vector<Complex> z(m), power(m, Complex(1.0)), value(m), running(m), target(m);
  for (std::size_t j = 0; j < m; ++j) {
    z[j] = grid.node(j);
    target[j] = evaluate(f, z[j]);
    out.f_norm = std::max(out.f_norm, std::abs(target[j]));
  }
  out.partial.resize(last + 1);
  out.cesaro.resize(last + 1);
  out.partial_error.resize(last + 1);
  out.cesaro_error.resize(last + 1);
  for (std::size_t n = 0; n <= last; ++n) {
    if (n % 256 == 0) {
      for (std::size_t j = 0; j < m; ++j) power[j] = grid.node((n % m) * j % m);
    }
    const Complex c = f[n];
    double ps = 0.0, cs = 0.0, pe = 0.0, ce = 0.0;
    const double inv = 1.0 / static_cast<double>(n + 1);
    for (std::size_t j = 0; j < m; ++j) {
      if (c != Complex{}) value[j] += c * power[j];
      running[j] += value[j];
      power[j] *= z[j];
      const Complex sigma = running[j] * inv;
      ps = std::max(ps, std::abs(value[j]));
      cs = std::max(cs, std::abs(sigma));
      pe = std::max(pe, std::abs(value[j] - target[j]));
      ce = std::max(ce, std::abs(sigma - target[j]));
    }
    out.partial[n] = ps;
    out.cesaro[n] = cs;
    out.partial_error[n] = pe;
    out.cesaro_error[n] = ce;
  }
  return out;
}

namespace {

// (1/2pi) int |sum_k m_k e^{ikt}| dt by the periodic trapezoid rule.
double multiplier_kernel_l1(const std::vector<Complex>& mult) {
  const TaylorPoly kernel(mult);
  const std::size_t q = 32 * mult.size();
  const CircleGrid grid(q);
  double s = 0.0;
  for (std::size_t j = 0; j < q; ++j) s += std::abs(evaluate(kernel, grid.node(j)));
  return s / static_cast<double>(q);
}

bool is_projection(const Scheme& scheme) {
  return std::holds_alternative<ProjectionScheme>(scheme.kind()) ||
         std::holds_alternative<ApproximantScheme>(scheme.kind());
}

TaylorPoly random_poly(std::size_t degree, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss;
  std::vector<Complex> c(degree + 1);
  for (auto& v : c) v = Complex(gauss(rng), gauss(rng));
  return TaylorPoly(std::move(c));
}

double ratio(const Scheme& scheme, const SpaceHandle& space, std::size_t n,
             const TaylorPoly& f) {
  const double denom = space.norm(f);
  if (denom == 0.0) return 0.0;
  return space.norm(scheme.apply(n, f)) / denom;
}

}  // namespace

std::optional<std::pair<double, std::string>> structural_upper_bound(
    const Scheme& scheme, const SpaceHandle& space, std::size_t n) {
  if (is_projection(scheme)) {
    if (space.is_hilbert()) return std::pair{1.0, std::string("orthogonal-projection")};
    return std::nullopt;
  }
  const auto mult = scheme.multipliers(n);
  if (!mult) return std::nullopt;
  switch (space.kind()) {
    case SpaceKind::kSupCircle:
      if (std::holds_alternative<CesaroScheme>(scheme.kind())) {
        return std::pair{1.0, std::string("fejer-positivity")};
      }
      if (std::holds_alternative<PartialSumScheme>(scheme.kind())) {
        return std::pair{lebesgue_constant(n), std::string("lebesgue-kernel")};
      }
      return std::pair{multiplier_kernel_l1(*mult), std::string("kernel-integral")};
    case SpaceKind::kWeightedCoefficient: {
      double best = 0.0;
      for (Complex c : *mult) best = std::max(best, std::abs(c));
      return std::pair{best, std::string("diagonal-multiplier")};
    }
    default:
      return std::nullopt;
  }
}

OperatorNormEstimate scheme_norm_estimate(const Scheme& scheme,
                                          const SpaceHandle& space, std::size_t n,
                                          const NormEstimateOptions& options) {
  if (n > space.horizon()) {
    throw Error(ErrorKind::kDegreeExceedsHorizon,
                "n = " + std::to_string(n) + " beyond horizon " +
                    std::to_string(space.horizon()));
  }
  OperatorNormEstimate est;
  if (auto upper = structural_upper_bound(scheme, space, n)) {
    est.upper = upper->first;
    est.method = upper->second;
  }
  std::mt19937_64 rng(options.seed);
  const std::size_t horizon = space.horizon();

  if (space.is_hilbert()) {
    const std::size_t dim = horizon + 1;
    const auto& l = space.gram_matrix().cholesky_factor();
    const auto lower_l = l.triangularView<Eigen::Lower>();
    const bool build = dim <= options.exact_limit;
    Eigen::MatrixXcd b;
    if (build) {
      Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(dim),
                                                  static_cast<Eigen::Index>(dim));
      for (std::size_t k = 0; k < dim; ++k) {
        const TaylorPoly col = scheme.apply(n, TaylorPoly::monomial(k));
        for (std::size_t j = 0; j < col.size() && j < dim; ++j) {
          a(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(k)) = col[j];
        }
      }
      // ||T f|| / ||f|| = ||B u|| / ||u|| with u = L^* f, B = L^* A L^{-*}.
      const Eigen::MatrixXcd la = l.adjoint() * a;
      b = lower_l.solve(la.adjoint()).adjoint();
      Eigen::BDCSVD<Eigen::MatrixXcd> svd(b);
      est.exact = svd.singularValues()(0);
      est.method = "exact-hilbert";
    }
    std::normal_distribution<double> gauss;
    for (std::size_t t = 0; t < options.trials; ++t) {
      Eigen::VectorXcd u(static_cast<Eigen::Index>(dim));
      for (auto& v : u) v = Complex(gauss(rng), gauss(rng));
      if (build) {
        for (std::size_t s = 0; s < options.power_steps; ++s) {
          Eigen::VectorXcd next = b.adjoint() * (b * u);
          const double len = next.norm();
          if (len == 0.0) break;
          u = next / len;
        }
      }
      // Back to coefficients: f = L^{-*} u, then measure in the space itself.
      const Eigen::VectorXcd fv = lower_l.adjoint().solve(u);
      const TaylorPoly f(std::vector<Complex>(fv.data(), fv.data() + fv.size()));
      est.lower = std::max(est.lower, ratio(scheme, space, n, f));
    }
    for (std::size_t k : {std::size_t{0}, n}) {
      est.lower = std::max(est.lower, ratio(scheme, space, n, TaylorPoly::monomial(k)));
    }
    if (est.method.empty()) est.method = "random";
    if (est.exact && !est.upper) est.upper = est.exact;
    return est;
  }

  // Sampled sup or p != 2 coefficient norms: explicit witnesses only.
  std::vector<TaylorPoly> seeds;
  seeds.push_back(TaylorPoly::monomial(0));
  seeds.push_back(TaylorPoly::monomial(n));
  if (space.kind() == SpaceKind::kSupCircle) {
    if (n >= 1 && 4 * n <= horizon) seeds.push_back(landau_block(n, 4 * n));
    if (2 * (n + 1) <= horizon) seeds.push_back(fejer_block(n + 1));
  } else {
    for (std::size_t k = 1; k < n; ++k) seeds.push_back(TaylorPoly::monomial(k));
  }
  const std::size_t degree = std::min(horizon, 4 * (n + 1));
  for (std::size_t t = 0; t < options.trials; ++t) seeds.push_back(random_poly(degree, rng));
  for (const auto& f : seeds) est.lower = std::max(est.lower, ratio(scheme, space, n, f));
  if (est.method.empty()) est.method = "sampled";
  return est;
}

std::string_view to_string(GrowthTag tag) {
  switch (tag) {
    case GrowthTag::kBounded: return "bounded";
    case GrowthTag::kLogLike: return "log-like";
    case GrowthTag::kPowerLike: return "power-like";
  }
  return "unknown";
}

namespace {

struct LineFit {
  double slope = 0.0;
  double residual = 0.0;
};

LineFit fit_line(const std::vector<double>& x, const std::vector<double>& y) {
  const double n = static_cast<double>(x.size());
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) mx += x[i], my += y[i];
  mx /= n;
  my /= n;
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
  }
  LineFit f;
  f.slope = sxx > 0.0 ? sxy / sxx : 0.0;
  double ss = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double r = y[i] - (my + f.slope * (x[i] - mx));
    ss += r * r;
  }
  f.residual = std::sqrt(ss / n);
  return f;
}

}  // namespace

TrendFit fit_growth(const std::vector<double>& values) {
  TrendFit fit;
  if (values.size() < 4) return fit;
  const std::size_t last = values.size() - 1;
  const std::size_t first = std::max<std::size_t>(1, last / 2);
  std::vector<double> y, lx, sx;
  double mean = 0.0;
  for (std::size_t n = first; n <= last; ++n) {
    y.push_back(values[n]);
    lx.push_back(std::log(static_cast<double>(n)));
    sx.push_back(std::sqrt(static_cast<double>(n)));
    mean += values[n];
  }
  mean /= static_cast<double>(y.size());
  double ss = 0.0;
  for (double v : y) ss += (v - mean) * (v - mean);
  fit.residual_constant = std::sqrt(ss / static_cast<double>(y.size()));

  const LineFit log_fit = fit_line(lx, y);
  const LineFit sqrt_fit = fit_line(sx, y);
  fit.residual_log = log_fit.residual;
  fit.residual_sqrt = sqrt_fit.residual;

  const double scale = std::max(std::abs(mean), 1e-300);
  const double log_rise = log_fit.slope * (lx.back() - lx.front()) / scale;
  const double sqrt_rise = sqrt_fit.slope * (sx.back() - sx.front()) / scale;
  fit.relative_rise = std::max(log_rise, sqrt_rise);
  if (fit.relative_rise < 0.05) {
    fit.tag = GrowthTag::kBounded;
  } else if (log_rise >= 0.05 && (sqrt_rise < 0.05 || log_fit.residual <= sqrt_fit.residual)) {
    fit.tag = GrowthTag::kLogLike;
  } else {
    fit.tag = GrowthTag::kPowerLike;
  }
  return fit;
}

TrendReport divergence_trend(const SpaceHandle& space, const Scheme& scheme,
                             const TaylorPoly& f, std::size_t n_max) {
  TrendReport report;
  for (const auto& r : scheme_error_curve(scheme, space, f, n_max)) {
    report.image_norms.push_back(r.image_norm);
    report.error_norms.push_back(r.error_norm);
  }
  report.fit = fit_growth(report.image_norms);
  report.note = "finite-horizon trend over n <= " + std::to_string(n_max) +
                "; descriptive only";
  return report;
}

}  // namespace polyapprox::diagnostics
