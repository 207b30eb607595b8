#include "polyapprox/spaces.hpp"

#include <cmath>
#include <sstream>
#include <variant>

#include "polyapprox/errors.hpp"

namespace polyapprox {

WeightSequence WeightSequence::constant(std::size_t horizon, double value) {
  return {std::vector<double>(horizon + 1, value), std::nullopt};
}

WeightSequence WeightSequence::linear(std::size_t horizon) {
  WeightSequence w;
  w.alpha.resize(horizon + 1);
  for (std::size_t n = 0; n <= horizon; ++n) w.alpha[n] = static_cast<double>(n + 1);
  return w;
}

WeightSequence WeightSequence::geometric(std::size_t horizon, double base) {
  WeightSequence w;
  w.alpha.resize(horizon + 1);
  for (std::size_t n = 0; n <= horizon; ++n) {
    w.alpha[n] = std::pow(base, static_cast<double>(n));
  }
  return w;
}

namespace {

void require_positive(const WeightSequence& w) {
  if (w.alpha.empty()) {
    throw Error(ErrorKind::kNonpositiveWeight, "weight sequence is empty");
  }
  for (std::size_t n = 0; n < w.alpha.size(); ++n) {
    if (!(w.alpha[n] > 0.0) || !std::isfinite(w.alpha[n])) {
      throw Error(ErrorKind::kNonpositiveWeight,
                  "alpha_" + std::to_string(n) + " = " + std::to_string(w.alpha[n]));
    }
  }
}

}  // namespace

AdmissibilityReport check_weight_admissible(const WeightSequence& w,
                                            double threshold) {
  require_positive(w);
  AdmissibilityReport report;
  report.threshold = threshold;
  const std::size_t n_last = w.horizon();
  const auto root_dev = [&](std::size_t n) {
    return std::abs(std::exp(std::log(w.alpha[n]) / static_cast<double>(n)) - 1.0);
  };
  if (n_last >= 1) {
    for (std::size_t n = std::max<std::size_t>(1, n_last / 2); n <= n_last; ++n) {
      report.tail_deviation = std::max(report.tail_deviation, root_dev(n));
    }
    report.final_deviation = root_dev(n_last);
  }
  report.pass = report.tail_deviation <= threshold;
  report.note =
      "trend check over the last half of the horizon; not conclusive for the "
      "limit of alpha_n^(1/n)";
  return report;
}

std::string_view to_string(SpaceKind kind) {
  switch (kind) {
    case SpaceKind::kWeightedCoefficient: return "weighted";
    case SpaceKind::kGramHilbert: return "gram";
    case SpaceKind::kSupCircle: return "sup";
    case SpaceKind::kHb: return "hb";
  }
  return "unknown";
}

struct WeightedData {
  WeightSequence weights;
  double p;
  std::optional<GramMatrix> gram;  // p == 2 only
};
struct GramData {
  GramMatrix gram;
};
struct SupData {
  std::size_t oversampling;
  std::size_t horizon;
};
struct HbData {
  hb::HbDescriptor descriptor;
};

struct SpaceHandle::Impl {
  std::variant<WeightedData, GramData, SupData, HbData> data;
};

SpaceHandle::SpaceHandle(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}

SpaceHandle SpaceHandle::weighted(WeightSequence weights, double p) {
  require_positive(weights);
  if (!(p >= 1.0) || !std::isfinite(p)) {
    throw Error(ErrorKind::kInvalidArgument, "weighted space needs 1 <= p < infinity");
  }
  std::optional<GramMatrix> gram;
  if (p == 2.0) {
    Eigen::VectorXd diag(static_cast<Eigen::Index>(weights.alpha.size()));
    for (std::size_t n = 0; n < weights.alpha.size(); ++n) {
      diag(static_cast<Eigen::Index>(n)) = weights.alpha[n] * weights.alpha[n];
    }
    gram = GramMatrix::diagonal(diag);
  }
  return SpaceHandle(std::make_shared<Impl>(
      Impl{WeightedData{std::move(weights), p, std::move(gram)}}));
}

SpaceHandle SpaceHandle::hardy(std::size_t horizon) {
  return weighted(WeightSequence::constant(horizon), 2.0);
}

SpaceHandle SpaceHandle::gram(GramMatrix g) {
  return SpaceHandle(std::make_shared<Impl>(Impl{GramData{std::move(g)}}));
}

SpaceHandle SpaceHandle::sup_circle(std::size_t oversampling, std::size_t horizon) {
  if (oversampling == 0) {
    throw Error(ErrorKind::kInvalidArgument, "oversampling factor must be positive");
  }
  return SpaceHandle(std::make_shared<Impl>(Impl{SupData{oversampling, horizon}}));
}

SpaceHandle SpaceHandle::hb(hb::HbDescriptor descriptor) {
  return SpaceHandle(std::make_shared<Impl>(Impl{HbData{std::move(descriptor)}}));
}

SpaceKind SpaceHandle::kind() const {
  return static_cast<SpaceKind>(impl_->data.index());
}

std::size_t SpaceHandle::horizon() const {
  return std::visit(
      [](const auto& d) -> std::size_t {
        using T = std::decay_t<decltype(d)>;
        if constexpr (std::is_same_v<T, WeightedData>) return d.weights.horizon();
        if constexpr (std::is_same_v<T, GramData>) return d.gram.horizon();
        if constexpr (std::is_same_v<T, SupData>) return d.horizon;
        if constexpr (std::is_same_v<T, HbData>) return d.descriptor.horizon();
      },
      impl_->data);
}

bool SpaceHandle::is_hilbert() const {
  if (const auto* w = std::get_if<WeightedData>(&impl_->data)) return w->p == 2.0;
  return !std::holds_alternative<SupData>(impl_->data);
}

std::optional<double> SpaceHandle::exponent() const {
  if (const auto* w = std::get_if<WeightedData>(&impl_->data)) return w->p;
  if (std::holds_alternative<SupData>(impl_->data)) return std::nullopt;
  return 2.0;
}

const WeightSequence* SpaceHandle::weights() const {
  const auto* w = std::get_if<WeightedData>(&impl_->data);
  return w ? &w->weights : nullptr;
}

std::size_t SpaceHandle::oversampling() const {
  const auto* s = std::get_if<SupData>(&impl_->data);
  return s ? s->oversampling : 0;
}

const hb::HbDescriptor* SpaceHandle::hb_descriptor() const {
  const auto* h = std::get_if<HbData>(&impl_->data);
  return h ? &h->descriptor : nullptr;
}

const GramMatrix& SpaceHandle::gram_matrix() const {
  if (const auto* w = std::get_if<WeightedData>(&impl_->data); w && w->gram) {
    return *w->gram;
  }
  if (const auto* g = std::get_if<GramData>(&impl_->data)) return g->gram;
  if (const auto* h = std::get_if<HbData>(&impl_->data)) return h->descriptor.gram();
  throw Error(ErrorKind::kNotAHilbertSpace,
              std::string(to_string(kind())) + " space has no inner product");
}

namespace {

void check_horizon(const TaylorPoly& f, std::size_t horizon) {
  const auto d = f.degree();
  if (d && *d > horizon) {
    throw Error(ErrorKind::kDegreeExceedsHorizon,
                "degree " + std::to_string(*d) + " exceeds horizon " +
                    std::to_string(horizon));
  }
}

}  // namespace

double sup_norm_estimate(const TaylorPoly& f, std::size_t oversampling) {
  const auto d = f.degree();
  if (!d) return 0.0;
  return max_modulus_on(f, CircleGrid(oversampling * (*d + 1)));
}

double SpaceHandle::norm(const TaylorPoly& f) const {
  check_horizon(f, horizon());
  return std::visit(
      [&](const auto& d) -> double {
        using T = std::decay_t<decltype(d)>;
        if constexpr (std::is_same_v<T, WeightedData>) {
          const std::size_t n = f.degree() ? *f.degree() + 1 : 0;
          if (d.p == 2.0) {
            double s = 0.0;
            for (std::size_t k = 0; k < n; ++k) {
              s += std::norm(f[k]) * d.weights.alpha[k] * d.weights.alpha[k];
            }
            return std::sqrt(s);
          }
          // Scale by the largest term so large p does not overflow.
          double big = 0.0;
          for (std::size_t k = 0; k < n; ++k) {
            big = std::max(big, std::abs(f[k]) * d.weights.alpha[k]);
          }
          if (big == 0.0) return 0.0;
          double s = 0.0;
          for (std::size_t k = 0; k < n; ++k) {
            s += std::pow(std::abs(f[k]) * d.weights.alpha[k] / big, d.p);
          }
          return big * std::pow(s, 1.0 / d.p);
        }
        if constexpr (std::is_same_v<T, GramData>) {
          return std::sqrt(std::max(0.0, d.gram.inner(f, f).real()));
        }
        if constexpr (std::is_same_v<T, SupData>) {
          return sup_norm_estimate(f, d.oversampling);
        }
        if constexpr (std::is_same_v<T, HbData>) return d.descriptor.norm(f);
      },
      impl_->data);
}

Complex SpaceHandle::inner_product(const TaylorPoly& f, const TaylorPoly& g) const {
  if (!is_hilbert()) {
    throw Error(ErrorKind::kNotAHilbertSpace,
                std::string(to_string(kind())) + " space has no inner product");
  }
  check_horizon(f, horizon());
  check_horizon(g, horizon());
  if (const auto* h = std::get_if<HbData>(&impl_->data)) {
    return h->descriptor.inner(f, g);
  }
  if (const auto* w = std::get_if<WeightedData>(&impl_->data)) {
    Complex s{};
    const std::size_t n = std::min(f.size(), g.size());
    for (std::size_t k = 0; k < n; ++k) {
      s += std::conj(f[k]) * g[k] * w->weights.alpha[k] * w->weights.alpha[k];
    }
    return s;
  }
  return gram_matrix().inner(f, g);
}

std::vector<double> SpaceHandle::monomial_norms(std::size_t up_to) const {
  if (up_to > horizon()) {
    throw Error(ErrorKind::kDegreeExceedsHorizon,
                "monomial_norms up to " + std::to_string(up_to) + " beyond horizon " +
                    std::to_string(horizon()));
  }
  std::vector<double> out(up_to + 1);
  for (std::size_t n = 0; n <= up_to; ++n) out[n] = norm(TaylorPoly::monomial(n));
  return out;
}

std::string SpaceHandle::describe() const {
  std::ostringstream os;
  os << to_string(kind()) << "(horizon=" << horizon();
  if (const auto* w = std::get_if<WeightedData>(&impl_->data)) os << ", p=" << w->p;
  if (const auto* s = std::get_if<SupData>(&impl_->data)) {
    os << ", oversampling=" << s->oversampling;
  }
  os << ")";
  return os.str();
}

}  // namespace polyapprox
