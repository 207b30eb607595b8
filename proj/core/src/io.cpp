#include "polyapprox/io.hpp"

#include <cmath>
#include <json.hpp>
#include <utility>

#include "polyapprox/errors.hpp"

namespace polyapprox::io {

using nlohmann::json;

namespace {

[[noreturn]] void fail(std::string_view field, const std::string& msg) {
  throw Error(ErrorKind::kConfigError, std::string(field) + ": " + msg);
}

std::string at(std::string_view field, std::string_view key) {
  return std::string(field) + "." + std::string(key);
}

std::string at(std::string_view field, std::size_t i) {
  return std::string(field) + "[" + std::to_string(i) + "]";
}

json parse(const std::string& text, std::string_view field) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    fail(field, std::string("invalid JSON (") + e.what() + ")");
  }
}

double read_number(const json& j, std::string_view field) {
  if (!j.is_number()) fail(field, "expected a number");
  const double v = j.get<double>();
  if (!std::isfinite(v)) fail(field, "expected a finite number");
  return v;
}

std::size_t read_count(const json& j, std::string_view field) {
  if (!j.is_number_integer() || j.get<long long>() < 0) {
    fail(field, "expected a nonnegative integer");
  }
  return j.get<std::size_t>();
}

Complex read_complex(const json& j, std::string_view field) {
  if (j.is_number()) return {read_number(j, field), 0.0};
  if (!j.is_array() || j.size() != 2) fail(field, "expected [re, im] or a number");
  return {read_number(j[0], at(field, 0)), read_number(j[1], at(field, 1))};
}

std::vector<Complex> read_complex_list(const json& j, std::string_view field) {
  if (!j.is_array()) fail(field, "expected an array");
  std::vector<Complex> out;
  out.reserve(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(read_complex(j[i], at(field, i)));
  return out;
}

const json& require(const json& obj, std::string_view key, std::string_view field) {
  if (!obj.is_object()) fail(field, "expected an object");
  const auto it = obj.find(std::string(key));
  if (it == obj.end()) fail(at(field, key), "missing required field");
  return *it;
}

std::size_t horizon_of(const json& obj, std::size_t fallback, std::string_view field) {
  const auto it = obj.find("horizon");
  return it == obj.end() ? fallback : read_count(*it, at(field, "horizon"));
}

json complex_json(Complex c) { return json::array({c.real(), c.imag()}); }

WeightSequence read_weights(const json& j, std::size_t horizon, bool horizon_given,
                            std::string_view field) {
  WeightSequence w;
  if (j.is_array()) {
    if (j.empty()) fail(field, "weight array is empty");
    for (std::size_t i = 0; i < j.size(); ++i) {
      const double a = read_number(j[i], at(field, i));
      if (!(a > 0.0)) fail(at(field, i), "weights must be positive");
      w.alpha.push_back(a);
    }
    if (horizon_given && w.horizon() != horizon) {
      fail(field, "has " + std::to_string(j.size()) + " entries but horizon is " +
                      std::to_string(horizon));
    }
    return w;
  }
  if (!j.is_object()) fail(field, "expected an array or a rule object");
  const json& rule = require(j, "rule", field);
  if (!rule.is_string()) fail(at(field, "rule"), "expected a string");
  const auto name = rule.get<std::string>();
  if (name == "constant") {
    const auto it = j.find("value");
    const double v = it == j.end() ? 1.0 : read_number(*it, at(field, "value"));
    if (!(v > 0.0)) fail(at(field, "value"), "weights must be positive");
    return WeightSequence::constant(horizon, v);
  }
  if (name == "linear") return WeightSequence::linear(horizon);
  if (name == "geometric") {
    const double q = read_number(require(j, "base", field), at(field, "base"));
    if (!(q > 0.0)) fail(at(field, "base"), "base must be positive");
    return WeightSequence::geometric(horizon, q);
  }
  fail(at(field, "rule"), "unknown rule '" + name + "' (constant, linear, geometric)");
}

GramMatrix read_gram(const json& j, std::string_view field) {
  if (!j.is_array() || j.empty()) fail(field, "expected a nonempty array");
  Eigen::MatrixXcd g;
  const bool nested = j[0].is_array() && !j[0].empty() && j[0][0].is_array();
  if (nested) {
    const auto n = static_cast<Eigen::Index>(j.size());
    g.resize(n, n);
    for (Eigen::Index r = 0; r < n; ++r) {
      const auto row_field = at(field, static_cast<std::size_t>(r));
      const json& row = j[static_cast<std::size_t>(r)];
      if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != n) {
        fail(row_field, "expected " + std::to_string(n) + " entries");
      }
      for (Eigen::Index c = 0; c < n; ++c) {
        g(r, c) = read_complex(row[static_cast<std::size_t>(c)],
                               at(row_field, static_cast<std::size_t>(c)));
      }
    }
  } else {
    const auto flat = read_complex_list(j, field);
    const auto n = static_cast<Eigen::Index>(std::llround(std::sqrt(flat.size())));
    if (static_cast<std::size_t>(n * n) != flat.size()) {
      fail(field, "flat matrix length " + std::to_string(flat.size()) + " is not a square");
    }
    g.resize(n, n);
    for (Eigen::Index r = 0; r < n; ++r) {
      for (Eigen::Index c = 0; c < n; ++c) g(r, c) = flat[static_cast<std::size_t>(r * n + c)];
    }
  }
  try {
    return GramMatrix(std::move(g));
  } catch (const Error& e) {
    fail(field, e.what());
  }
}

}  // namespace

SpaceHandle space_from_json(const std::string& text, std::size_t default_horizon,
                            std::string_view field) {
  const json j = parse(text, field);
  const json& kind = require(j, "kind", field);
  if (!kind.is_string()) fail(at(field, "kind"), "expected a string");
  const auto name = kind.get<std::string>();
  const bool horizon_given = j.contains("horizon");
  const std::size_t horizon = horizon_of(j, default_horizon, field);

  if (name == "hardy") return SpaceHandle::hardy(horizon);
  if (name == "weighted") {
    double p = 2.0;
    if (j.contains("p")) p = read_number(j["p"], at(field, "p"));
    if (!(p >= 1.0)) fail(at(field, "p"), "exponent must satisfy p >= 1");
    const auto w = read_weights(require(j, "alpha", field), horizon, horizon_given,
                                at(field, "alpha"));
    return SpaceHandle::weighted(w, p);
  }
  if (name == "gram") return SpaceHandle::gram(read_gram(require(j, "matrix", field), at(field, "matrix")));
  if (name == "sup") {
    std::size_t ov = kDefaultOversampling;
    if (j.contains("oversampling")) ov = read_count(j["oversampling"], at(field, "oversampling"));
    if (ov < 1) fail(at(field, "oversampling"), "must be >= 1");
    return SpaceHandle::sup_circle(ov, horizon);
  }
  if (name == "hb") {
    const auto b = read_complex_list(require(j, "b", field), at(field, "b"));
    std::size_t factor = 4;
    if (j.contains("working_factor")) {
      factor = read_count(j["working_factor"], at(field, "working_factor"));
    }
    if (factor < 1) fail(at(field, "working_factor"), "must be >= 1");
    return SpaceHandle::hb(hb::hb_gram(hb::SymbolB(TaylorPoly(b)), horizon, factor));
  }
  fail(at(field, "kind"), "unknown space kind '" + name + "' (weighted, hardy, gram, sup, hb)");
}

std::string space_to_json(const SpaceHandle& space) {
  json j;
  j["horizon"] = space.horizon();
  switch (space.kind()) {
    case SpaceKind::kWeightedCoefficient:
      j["kind"] = "weighted";
      j["p"] = *space.exponent();
      j["alpha"] = space.weights()->alpha;
      break;
    case SpaceKind::kGramHilbert:
      j["kind"] = "gram";
      j["matrix"] = json::parse(gram_to_json(space.gram_matrix()));
      break;
    case SpaceKind::kSupCircle:
      j["kind"] = "sup";
      j["oversampling"] = space.oversampling();
      break;
    case SpaceKind::kHb: {
      const auto* d = space.hb_descriptor();
      j["kind"] = "hb";
      j["b"] = json::parse(poly_to_json(d->symbol().poly()));
      j["working_factor"] = d->working_horizon() / (d->horizon() + 1);
      break;
    }
  }
  return j.dump();
}

TriangularArray array_from_json(const std::string& text, std::string_view field) {
  const json j = parse(text, field);
  const json& rows = require(j, "rows", field);
  const auto rows_field = at(field, "rows");
  if (!rows.is_array()) fail(rows_field, "expected an array of rows");
  std::vector<std::vector<Complex>> out;
  for (std::size_t n = 0; n < rows.size(); ++n) {
    auto row = read_complex_list(rows[n], at(rows_field, n));
    if (row.size() != n + 1) {
      fail(at(rows_field, n), "expected " + std::to_string(n + 1) + " entries, got " +
                                  std::to_string(row.size()));
    }
    out.push_back(std::move(row));
  }
  return TriangularArray(std::move(out));
}

std::string array_to_json(const TriangularArray& a) {
  json rows = json::array();
  for (std::size_t n = 0; n < a.row_count(); ++n) {
    json row = json::array();
    for (Complex c : a.row(n)) row.push_back(complex_json(c));
    rows.push_back(std::move(row));
  }
  return json{{"rows", std::move(rows)}}.dump();
}

embedding::EmbeddingSpec embedding_spec_from_json(const std::string& text,
                                                  std::size_t default_horizon,
                                                  std::string_view field) {
  const json j = parse(text, field);
  const bool horizon_given = j.is_object() && j.contains("horizon");
  const std::size_t horizon = horizon_of(j, default_horizon, field);
  embedding::EmbeddingSpec spec;
  spec.weights = read_weights(require(j, "alpha", field), horizon, horizon_given,
                              at(field, "alpha"));
  if (j.contains("p")) spec.p = read_number(j["p"], at(field, "p"));
  if (!(spec.p >= 1.0)) fail(at(field, "p"), "exponent must satisfy p >= 1");
  if (j.contains("M")) spec.bound = read_number(j["M"], at(field, "M"));
  if (!(spec.bound >= 1.0)) fail(at(field, "M"), "bound must satisfy M >= 1");
  return spec;
}

std::string gram_to_json(const GramMatrix& g) {
  const auto& m = g.matrix();
  json rows = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(complex_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows.dump();
}

GramMatrix gram_from_json(const std::string& text, std::string_view field) {
  return read_gram(parse(text, field), field);
}

TaylorPoly poly_from_json(const std::string& text, std::string_view field) {
  return TaylorPoly(read_complex_list(parse(text, field), field));
}

std::string poly_to_json(const TaylorPoly& p) {
  json j = json::array();
  for (Complex c : p.coeffs()) j.push_back(complex_json(c));
  return j.dump();
}

}  // namespace polyapprox::io
