#include "polyapprox/embedding.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "polyapprox/errors.hpp"

namespace polyapprox::embedding {

void validate(const EmbeddingSpec& spec, double admissibility_threshold) {
  const auto report = check_weight_admissible(spec.weights, admissibility_threshold);
  if (!(spec.p >= 1.0) || !std::isfinite(spec.p)) {
    throw Error(ErrorKind::kInvalidArgument, "model exponent p must satisfy 1 <= p < inf");
  }
  if (!(spec.bound >= 1.0)) {
    throw Error(ErrorKind::kInvalidArgument, "biorthogonal bound M must be >= 1");
  }
  if (!report.pass) {
    throw Error(ErrorKind::kInvalidArgument,
                "weights fail the admissibility trend check (tail deviation " +
                    std::to_string(report.tail_deviation) + ")");
  }
}

CoefficientVector basis_vector(const EmbeddingSpec& spec, std::size_t n) {
  CoefficientVector y(n + 1);
  y[n] = spec.weights.alpha.at(n);
  return y;
}

double model_norm(const EmbeddingSpec& spec, const CoefficientVector& y) {
  double big = 0.0;
  for (Complex c : y) big = std::max(big, std::abs(c));
  if (big == 0.0) return 0.0;
  double s = 0.0;
  for (Complex c : y) s += std::pow(std::abs(c) / big, spec.p);
  return big * std::pow(s, 1.0 / spec.p);
}

TaylorPoly embed_J(const EmbeddingSpec& spec, const CoefficientVector& y) {
  std::size_t len = y.size();
  while (len > 0 && y[len - 1] == Complex{}) --len;
  if (len > spec.horizon() + 1) {
    throw Error(ErrorKind::kDegreeExceedsHorizon,
                "coefficient vector support " + std::to_string(len - 1) +
                    " beyond horizon " + std::to_string(spec.horizon()));
  }
  std::vector<Complex> c(len);
  for (std::size_t n = 0; n < len; ++n) c[n] = y[n] / spec.weights.alpha[n];
  return TaylorPoly(std::move(c));
}

SpaceHandle built_space(const EmbeddingSpec& spec) {
  return SpaceHandle::weighted(spec.weights, spec.p);
}

InclusionConstant inclusion_constant(const EmbeddingSpec& spec, double r) {
  if (!(r > 0.0 && r < 1.0)) {
    throw Error(ErrorKind::kInvalidArgument, "inclusion radius must lie in (0, 1)");
  }
  const auto& alpha = spec.weights.alpha;
  const std::size_t n_last = spec.horizon();
  InclusionConstant out;
  double rn = 1.0;
  for (std::size_t n = 0; n <= n_last; ++n) {
    out.partial_sum += spec.bound * rn / alpha[n];
    rn *= r;
  }
  const std::size_t quarter = n_last - n_last / 4;
  const double floor_alpha =
      *std::min_element(alpha.begin() + static_cast<std::ptrdiff_t>(quarter), alpha.end());
  // rn == r^{N+1} here.
  out.tail_bound = spec.bound * rn / (floor_alpha * (1.0 - r));
  out.value = out.partial_sum + out.tail_bound;
  out.tail_negligible = out.tail_bound < 0.01 * out.partial_sum;
  if (out.tail_bound > 0.1 * out.partial_sum) {
    throw Error(ErrorKind::kTailNotControlled,
                "tail estimate " + std::to_string(out.tail_bound) +
                    " exceeds 10% of partial sum " + std::to_string(out.partial_sum) +
                    " at r = " + std::to_string(r));
  }
  return out;
}

InclusionReport verify_inclusion_bound(const EmbeddingSpec& spec,
                                       std::size_t samples, double r,
                                       std::uint64_t seed) {
  const InclusionConstant c = inclusion_constant(spec, r);
  InclusionReport report;
  report.r = r;
  report.constant = c.value;
  report.trials = samples;

  const std::size_t n_last = spec.horizon();
  const std::size_t nodes = 16 * (n_last + 1);
  const CircleGrid grid(nodes);
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss;
  std::uniform_int_distribution<std::size_t> pick(0, n_last);

  for (std::size_t t = 0; t < samples; ++t) {
    CoefficientVector y;
    if (t % 4 == 3) {
      y = basis_vector(spec, pick(rng));
    } else {
      // Random support length, Gaussian entries.
      y.resize(pick(rng) + 1);
      for (auto& v : y) v = Complex(gauss(rng), gauss(rng));
    }
    const TaylorPoly f = embed_J(spec, y);
    const double ynorm = model_norm(spec, y);
    if (ynorm == 0.0) continue;
    double sup = 0.0;
    for (std::size_t j = 0; j < grid.size(); ++j) {
      sup = std::max(sup, std::abs(evaluate(f, r * grid.node(j))));
    }
    const double ratio = sup / ynorm;
    report.max_ratio = std::max(report.max_ratio, ratio);
    if (ratio > c.value) ++report.violations;
  }
  return report;
}

MembershipReport membership_beyond_disk(const EmbeddingSpec& spec,
                                        const std::function<Complex(std::size_t)>& coeff,
                                        double radius) {
  if (!(radius > 1.0)) {
    throw Error(ErrorKind::kInvalidArgument, "radius of convergence must exceed 1");
  }
  const auto& alpha = spec.weights.alpha;
  const std::size_t n_last = spec.horizon();

  MembershipReport out;
  std::vector<double> log_abs(n_last + 1);
  for (std::size_t n = 0; n <= n_last; ++n) {
    const double a = std::abs(coeff(n));
    const double term = a * alpha[n];
    out.partial_sum += term;
    if (n > n_last / 2) out.cauchy_gap += term;
    log_abs[n] = a > 0.0 ? std::log(a) : -std::numeric_limits<double>::infinity();
  }

  // Trailing weight growth, extended geometrically past the horizon.
  double growth = 1.0;
  const std::size_t quarter = n_last - n_last / 4;
  for (std::size_t n = quarter; n < n_last; ++n) {
    growth = std::max(growth, alpha[n + 1] / alpha[n]);
  }

  const double rho_cap = std::isfinite(radius) ? radius : 16.0;
  double best_tail = std::numeric_limits<double>::infinity();
  for (double t : {0.25, 0.5, 0.75}) {
    const double rho = std::isfinite(radius) ? 1.0 + (rho_cap - 1.0) * t
                                             : std::pow(rho_cap, t);
    const double q = growth / rho;
    if (q >= 1.0) continue;
    // log(C_rho rho^{-N}) = max_n (log|c_n| + (n - N) log rho).
    double log_lead = -std::numeric_limits<double>::infinity();
    for (std::size_t n = 0; n <= n_last; ++n) {
      log_lead = std::max(log_lead, log_abs[n] + (static_cast<double>(n) -
                                                  static_cast<double>(n_last)) *
                                                     std::log(rho));
    }
    const double tail = alpha[n_last] * std::exp(log_lead) * q / (1.0 - q);
    if (tail < best_tail) {
      best_tail = tail;
      out.best_rho = rho;
    }
  }
  if (!std::isfinite(best_tail)) {
    throw Error(ErrorKind::kDivergentEvidence,
                "no sampled rho < R dominates the weight growth " + std::to_string(growth));
  }
  out.tail_bound = best_tail;
  out.norm_bound = out.partial_sum + out.tail_bound;
  out.converged = out.cauchy_gap <= 1e-6 * std::max(1.0, out.partial_sum) &&
                  out.tail_bound <= 1e-6 * std::max(1.0, out.partial_sum);
  if (!out.converged) {
    throw Error(ErrorKind::kDivergentEvidence,
                "partial sums not Cauchy at the horizon (gap " +
                    std::to_string(out.cauchy_gap) + ", tail " +
                    std::to_string(out.tail_bound) + ")");
  }
  return out;
}

}  // namespace polyapprox::embedding
