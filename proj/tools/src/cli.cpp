#include "polyapprox_cli/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <json.hpp>
#include <limits>
#include <map>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>
#include <variant>

#include "polyapprox/diagnostics.hpp"
#include "polyapprox/embedding.hpp"
#include "polyapprox/errors.hpp"
#include "polyapprox/hb.hpp"
#include "polyapprox/io.hpp"
#include "polyapprox/schemes.hpp"
#include "polyapprox/spaces.hpp"

namespace polyapprox::cli {

using nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct Globals {
  std::string config;
  std::optional<std::uint64_t> seed;
  std::string output;
  std::size_t horizon = kDefaultHorizon;
};

[[noreturn]] void config_error(const std::string& field, const std::string& msg) {
  throw Error(ErrorKind::kConfigError, field + ": " + msg);
}

std::string read_file(const std::string& path, const std::string& field) {
  std::ifstream in(path, std::ios::binary);
  if (!in) config_error(field, "cannot open '" + path + "'");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::string num(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string opt_num(const std::optional<double>& v) { return v ? num(*v) : ""; }

struct Config {
  json doc;
  fs::path dir;  // relative paths inside the config resolve against this

  const json* find(const std::string& key) const {
    const auto it = doc.find(key);
    return it == doc.end() ? nullptr : &*it;
  }
  const json& require(const std::string& key) const {
    const json* j = find(key);
    if (!j) config_error(key, "missing required field");
    return *j;
  }
  std::string resolve(const std::string& path) const {
    const fs::path p(path);
    return p.is_absolute() ? path : (dir / p).string();
  }
};

Config load_config(const Globals& g, bool required = true) {
  Config c;
  if (g.config.empty()) {
    if (required) config_error("--config", "a config file is required");
    c.doc = json::object();
    return c;
  }
  const std::string text = read_file(g.config, "--config");
  try {
    c.doc = json::parse(text);
  } catch (const json::parse_error& e) {
    config_error("--config", std::string("invalid JSON (") + e.what() + ")");
  }
  if (!c.doc.is_object()) config_error("--config", "top level must be an object");
  c.dir = fs::path(g.config).parent_path();
  return c;
}

std::size_t read_count(const json& j, const std::string& field) {
  if (!j.is_number_integer() || j.get<long long>() < 0) {
    config_error(field, "expected a nonnegative integer");
  }
  return j.get<std::size_t>();
}

double read_number(const json& j, const std::string& field) {
  if (!j.is_number() || !std::isfinite(j.get<double>())) config_error(field, "expected a finite number");
  return j.get<double>();
}

std::uint64_t seed_of(const Globals& g, const Config& c) {
  if (g.seed) return *g.seed;
  if (const json* s = c.find("seed")) return read_count(*s, "seed");
  return 0;
}

void emit(const Globals& g, const Config& c, std::ostream& out, const std::string& text) {
  std::string path = g.output;
  if (path.empty()) {
    if (const json* o = c.find("output")) {
      if (!o->is_string()) config_error("output", "expected a path string");
      path = c.resolve(o->get<std::string>());
    }
  }
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) config_error("output", "cannot write '" + path + "'");
  f << text;
}

SpaceHandle space_from(const json& j, const Globals& g, const std::string& field) {
  return io::space_from_json(j.dump(), g.horizon, field);
}

// ---- norms ----------------------------------------------------------------

std::string cmd_norms(const Globals& g, const Config& c) {
  const SpaceHandle space = space_from(c.require("space"), g, "space");
  std::size_t n_max = space.horizon();
  if (const json* n = c.find("n_max")) n_max = read_count(*n, "n_max");
  if (n_max > space.horizon()) {
    config_error("n_max", std::to_string(n_max) + " exceeds space horizon " +
                              std::to_string(space.horizon()));
  }
  std::string csv = "n,monomial_norm\n";
  const auto norms = space.monomial_norms(n_max);
  for (std::size_t n = 0; n <= n_max; ++n) csv += std::to_string(n) + "," + num(norms[n]) + "\n";
  return csv;
}

// ---- scheme-run -----------------------------------------------------------

struct NamedInput {
  std::string name;
  TaylorPoly f;
};

TaylorPoly input_rule(const json& j, const std::string& field, std::size_t horizon,
                      std::mt19937_64& rng) {
  const json& rule = j.at("rule");
  if (!rule.is_string()) config_error(field + ".rule", "expected a string");
  std::size_t degree = horizon;
  if (j.contains("degree")) degree = read_count(j["degree"], field + ".degree");
  if (degree > horizon) {
    config_error(field + ".degree", std::to_string(degree) + " exceeds horizon " +
                                        std::to_string(horizon));
  }
  std::vector<Complex> c(degree + 1);
  const auto name = rule.get<std::string>();
  if (name == "geometric") {
    const double q = j.contains("ratio") ? read_number(j["ratio"], field + ".ratio") : 0.5;
    double p = 1.0;
    for (auto& v : c) v = p, p *= q;
  } else if (name == "harmonic") {
    for (std::size_t n = 0; n <= degree; ++n) c[n] = 1.0 / static_cast<double>(n + 1);
  } else if (name == "random") {
    std::normal_distribution<double> gauss;
    for (auto& v : c) v = Complex(gauss(rng), gauss(rng));
  } else {
    config_error(field + ".rule", "unknown rule '" + name + "' (geometric, harmonic, random)");
  }
  return TaylorPoly(std::move(c));
}

std::vector<NamedInput> read_inputs(const Config& c, std::size_t horizon, std::uint64_t seed) {
  const json& list = c.require("inputs");
  if (!list.is_array() || list.empty()) config_error("inputs", "expected a nonempty array");
  std::mt19937_64 rng(seed);
  std::vector<NamedInput> out;
  for (std::size_t i = 0; i < list.size(); ++i) {
    const std::string field = "inputs[" + std::to_string(i) + "]";
    const json& j = list[i];
    if (!j.is_object()) config_error(field, "expected an object");
    NamedInput in;
    in.name = "input" + std::to_string(i);
    if (j.contains("name")) {
      if (!j["name"].is_string()) config_error(field + ".name", "expected a string");
      in.name = j["name"].get<std::string>();
      if (in.name.find_first_of(",\"'\n") != std::string::npos) {
        config_error(field + ".name", "must not contain commas, quotes or newlines");
      }
    }
    if (j.contains("coeffs")) {
      in.f = io::poly_from_json(j["coeffs"].dump(), field + ".coeffs");
      if (in.f.size() > horizon + 1) {
        config_error(field + ".coeffs", "degree exceeds horizon " + std::to_string(horizon));
      }
    } else if (j.contains("gliding_hump")) {
      const json& h = j["gliding_hump"];
      const std::string hf = field + ".gliding_hump";
      if (!h.is_object()) config_error(hf, "expected an object");
      const std::size_t blocks = h.contains("blocks") ? read_count(h["blocks"], hf + ".blocks") : 3;
      const std::size_t base =
          h.contains("base_degree") ? read_count(h["base_degree"], hf + ".base_degree") : 8;
      try {
        in.f = diagnostics::gliding_hump(blocks, base, horizon).f;
      } catch (const Error& e) {
        config_error(hf, e.what());
      }
    } else if (j.contains("rule")) {
      in.f = input_rule(j, field, horizon, rng);
    } else {
      config_error(field, "needs one of coeffs, gliding_hump, rule");
    }
    out.push_back(std::move(in));
  }
  return out;
}

Scheme read_scheme(const Config& c, const SpaceHandle& space, std::size_t n_max) {
  const json& s = c.require("scheme");
  if (s.is_string()) {
    const auto name = s.get<std::string>();
    if (name == "partial") return Scheme::partial_sums();
    if (name == "cesaro") return Scheme::cesaro();
    if (name == "vallee-poussin") return Scheme::array(TriangularArray::vallee_poussin(n_max));
    if (name == "projection") {
      if (!space.is_hilbert()) config_error("scheme", "projection needs a Hilbert space");
      return Scheme::projection(space);
    }
    config_error("scheme", "unknown builtin '" + name +
                               "' (partial, cesaro, vallee-poussin, projection)");
  }
  if (!s.is_object()) config_error("scheme", "expected a builtin name or an object");
  TriangularArray a;
  if (s.contains("array_file")) {
    if (!s["array_file"].is_string()) config_error("scheme.array_file", "expected a path");
    const std::string path = c.resolve(s["array_file"].get<std::string>());
    if (!fs::exists(path)) config_error("scheme.array_file", "file not found: " + path);
    a = io::array_from_json(read_file(path, "scheme.array_file"), "scheme.array_file");
  } else if (s.contains("rows")) {
    a = io::array_from_json(s.dump(), "scheme");
  } else {
    config_error("scheme", "needs array_file or rows");
  }
  if (!a.has_row(n_max)) {
    config_error("scheme", "array has " + std::to_string(a.row_count()) +
                               " rows but n_max is " + std::to_string(n_max));
  }
  return Scheme::array(std::move(a));
}

struct Curve {
  std::vector<double> image;
  std::vector<double> error;
  double f_norm = 0.0;
};

Curve run_curve(const Scheme& scheme, const SpaceHandle& space, const TaylorPoly& f,
                std::size_t n_max) {
  Curve c;
  const bool sweep = space.kind() == SpaceKind::kSupCircle &&
                     (std::holds_alternative<PartialSumScheme>(scheme.kind()) ||
                      std::holds_alternative<CesaroScheme>(scheme.kind()));
  if (sweep) {
    // One common grid for all n, fine enough for f itself.
    const auto p = diagnostics::sup_profile(f, space.oversampling(), n_max);
    const bool partial = std::holds_alternative<PartialSumScheme>(scheme.kind());
    c.image = partial ? p.partial : p.cesaro;
    c.error = partial ? p.partial_error : p.cesaro_error;
    c.f_norm = p.f_norm;
    return c;
  }
  for (const auto& r : scheme_error_curve(scheme, space, f, n_max)) {
    c.image.push_back(r.image_norm);
    c.error.push_back(r.error_norm);
  }
  c.f_norm = space.norm(f);
  return c;
}

std::string cmd_scheme_run(const Globals& g, const Config& c) {
  const SpaceHandle space = space_from(c.require("space"), g, "space");
  const std::size_t n_max = read_count(c.require("n_max"), "n_max");
  if (n_max > space.horizon()) {
    config_error("n_max", std::to_string(n_max) + " exceeds space horizon " +
                              std::to_string(space.horizon()));
  }
  const Scheme scheme = read_scheme(c, space, n_max);
  const auto inputs = read_inputs(c, space.horizon(), seed_of(g, c));

  std::vector<Curve> curves;
  for (const auto& in : inputs) curves.push_back(run_curve(scheme, space, in.f, n_max));

  std::vector<double> lower(n_max + 1, 0.0);
  for (const auto& cv : curves) {
    if (cv.f_norm == 0.0) continue;
    for (std::size_t n = 0; n <= n_max; ++n) lower[n] = std::max(lower[n], cv.image[n] / cv.f_norm);
  }
  std::vector<std::optional<double>> upper(n_max + 1);
  for (std::size_t n = 0; n <= n_max; ++n) {
    if (auto u = diagnostics::structural_upper_bound(scheme, space, n)) upper[n] = u->first;
  }

  std::string csv = "input,n,error_norm,image_norm,lower_opnorm,upper_opnorm,tag\n";
  for (std::size_t i = 0; i < inputs.size(); ++i) {
    const std::string tag(diagnostics::to_string(diagnostics::fit_growth(curves[i].image).tag));
    for (std::size_t n = 0; n <= n_max; ++n) {
      csv += inputs[i].name + "," + std::to_string(n) + "," + num(curves[i].error[n]) + "," +
             num(curves[i].image[n]) + "," + num(lower[n]) + "," + opt_num(upper[n]) + "," +
             tag + "\n";
    }
  }
  return csv;
}

// ---- lebesgue -------------------------------------------------------------

std::string cmd_lebesgue(const Config& c, std::vector<std::size_t> ns,
                         std::size_t quadrature) {
  if (ns.empty()) {
    if (const json* j = c.find("n")) {
      if (!j->is_array()) config_error("n", "expected an array of integers");
      for (std::size_t i = 0; i < j->size(); ++i) {
        ns.push_back(read_count((*j)[i], "n[" + std::to_string(i) + "]"));
      }
    } else {
      ns = {0, 1, 10, 100};
    }
  }
  if (quadrature == 0) {
    if (const json* q = c.find("quadrature")) quadrature = read_count(*q, "quadrature");
  }
  std::string csv = "n,lebesgue_constant\n";
  for (std::size_t n : ns) {
    const double l = quadrature == 0 ? diagnostics::lebesgue_constant(n)
                                     : diagnostics::lebesgue_constant(n, quadrature);
    csv += std::to_string(n) + "," + num(l) + "\n";
  }
  return csv;
}

// ---- embed ----------------------------------------------------------------

struct MembershipTarget {
  std::string name;
  std::function<Complex(std::size_t)> coeff;
  double radius;
};

MembershipTarget read_target(const json& j, const std::string& field) {
  if (!j.is_object()) config_error(field, "expected an object");
  MembershipTarget t;
  if (!j.contains("rule") || !j["rule"].is_string()) config_error(field + ".rule", "expected a string");
  const auto rule = j["rule"].get<std::string>();
  t.name = j.contains("name") && j["name"].is_string() ? j["name"].get<std::string>() : rule;
  if (rule == "geometric") {
    const double q = j.contains("ratio") ? read_number(j["ratio"], field + ".ratio") : 0.5;
    if (!(std::abs(q) < 1.0)) config_error(field + ".ratio", "need |ratio| < 1");
    t.coeff = [q](std::size_t n) { return Complex(std::pow(q, static_cast<double>(n))); };
    t.radius = q == 0.0 ? std::numeric_limits<double>::infinity() : 1.0 / std::abs(q);
  } else if (rule == "exponential") {
    t.coeff = [](std::size_t n) {
      return Complex(std::exp(-std::lgamma(static_cast<double>(n) + 1.0)));
    };
    t.radius = std::numeric_limits<double>::infinity();
  } else {
    config_error(field + ".rule", "unknown rule '" + rule + "' (geometric, exponential)");
  }
  return t;
}

std::string cmd_embed(const Globals& g, const Config& c) {
  embedding::EmbeddingSpec spec;
  if (const json* f = c.find("spec_file")) {
    if (!f->is_string()) config_error("spec_file", "expected a path");
    const std::string path = c.resolve(f->get<std::string>());
    spec = io::embedding_spec_from_json(read_file(path, "spec_file"), g.horizon, "spec_file");
  } else {
    spec = io::embedding_spec_from_json(c.require("spec").dump(), g.horizon, "spec");
  }
  try {
    embedding::validate(spec);
  } catch (const Error& e) {
    config_error("spec", e.what());
  }
  std::vector<double> radii{0.5, 0.9};
  if (const json* r = c.find("r")) {
    if (!r->is_array()) config_error("r", "expected an array of radii");
    radii.clear();
    for (std::size_t i = 0; i < r->size(); ++i) {
      const double v = read_number((*r)[i], "r[" + std::to_string(i) + "]");
      if (!(v > 0.0 && v < 1.0)) config_error("r[" + std::to_string(i) + "]", "need 0 < r < 1");
      radii.push_back(v);
    }
  }
  std::size_t samples = 200;
  if (const json* s = c.find("samples")) samples = read_count(*s, "samples");
  std::vector<MembershipTarget> targets;
  if (const json* m = c.find("membership")) {
    if (!m->is_array()) config_error("membership", "expected an array");
    for (std::size_t i = 0; i < m->size(); ++i) {
      targets.push_back(read_target((*m)[i], "membership[" + std::to_string(i) + "]"));
    }
  }
  const std::uint64_t seed = seed_of(g, c);

  std::string csv = "check,parameter,value,status\n";
  const SpaceHandle x = embedding::built_space(spec);
  const auto norms = x.monomial_norms(spec.horizon());
  double monomial_dev = 0.0;
  for (std::size_t n = 0; n < norms.size(); ++n) {
    monomial_dev = std::max(monomial_dev, std::abs(norms[n] - spec.weights.alpha[n]) /
                                              spec.weights.alpha[n]);
  }
  csv += "monomial_norm_deviation," + std::to_string(spec.horizon()) + "," + num(monomial_dev) +
         "," + (monomial_dev <= 1e-12 ? "ok" : "mismatch") + "\n";

  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss;
  std::uniform_int_distribution<std::size_t> len(1, spec.horizon() + 1);
  double iso = 0.0;
  for (std::size_t t = 0; t < samples; ++t) {
    embedding::CoefficientVector y(len(rng));
    for (auto& v : y) v = Complex(gauss(rng), gauss(rng));
    const double ny = embedding::model_norm(spec, y);
    iso = std::max(iso, std::abs(x.norm(embedding::embed_J(spec, y)) - ny) / ny);
  }
  csv += "isometry_relative_error," + std::to_string(samples) + "," + num(iso) + "," +
         (iso <= 1e-12 ? "ok" : "mismatch") + "\n";

  for (double r : radii) {
    try {
      const auto cr = embedding::inclusion_constant(spec, r);
      csv += "inclusion_constant," + num(r) + "," + num(cr.value) + "," +
             (cr.tail_negligible ? "ok" : "tail-bounded") + "\n";
      const auto rep = embedding::verify_inclusion_bound(spec, samples, r, seed);
      csv += "inclusion_max_ratio," + num(r) + "," + num(rep.max_ratio) + "," +
             (rep.violations == 0 ? "ok" : "violated") + "\n";
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::kTailNotControlled) throw;
      csv += "inclusion_constant," + num(r) + ",nan," + std::string(e.name()) + "\n";
    }
  }
  for (const auto& t : targets) {
    try {
      const auto m = embedding::membership_beyond_disk(spec, t.coeff, t.radius);
      csv += "membership:" + t.name + "," + num(t.radius) + "," + num(m.norm_bound) + ",ok\n";
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::kDivergentEvidence) throw;
      csv += "membership:" + t.name + "," + num(t.radius) + ",nan," + std::string(e.name()) + "\n";
    }
  }
  return csv;
}

// ---- hb-gram --------------------------------------------------------------

std::string cmd_hb_gram(const Globals& g, const Config& c) {
  const json& desc = c.find("kind") ? c.doc : c.require("space");
  const std::string field = c.find("kind") ? "config" : "space";
  if (!desc.is_object() || !desc.contains("kind") || desc["kind"] != "hb") {
    config_error(field + ".kind", "hb-gram needs a space of kind \"hb\"");
  }
  const SpaceHandle space = space_from(desc, g, field);
  const auto* d = space.hb_descriptor();
  json out;
  out["kind"] = "hb";
  out["b"] = json::parse(io::poly_to_json(d->symbol().poly()));
  out["mate"] = json::parse(io::poly_to_json(d->mate().a));
  out["horizon"] = d->horizon();
  out["working_horizon"] = d->working_horizon();
  out["toeplitz_condition"] = d->condition();
  out["matrix"] = json::parse(io::gram_to_json(d->gram()));
  return out.dump(1) + "\n";
}

// ---- plot-script ----------------------------------------------------------

std::string cmd_plot_script(const Globals& g, const std::string& csv_path) {
  std::string path = csv_path;
  if (path.empty()) path = g.config;
  if (path.empty()) config_error("csv", "a CSV path is required");
  if (!fs::exists(path)) config_error("csv", "file not found: " + path);
  return plot_script(read_file(path, "csv"), fs::path(path).filename().string());
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Polynomial approximation schemes on holomorphic function spaces"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  std::uint64_t seed = 0;
  app.add_option("--config", g.config, "JSON config file");
  auto* seed_opt = app.add_option("--seed", seed, "random seed (default 0)");
  app.add_option("--output", g.output, "output file (default stdout)");
  app.add_option("--horizon", g.horizon, "default horizon N (default 512)");

  auto* norms = app.add_subcommand("norms", "monomial norms of a space");
  auto* scheme_run = app.add_subcommand("scheme-run", "error curves of a scheme");
  auto* lebesgue = app.add_subcommand("lebesgue", "Lebesgue constants of partial sums");
  std::vector<std::size_t> ns;
  std::size_t quadrature = 0;
  lebesgue->add_option("--n", ns, "degrees")->delimiter(',');
  lebesgue->add_option("--quadrature", quadrature, "quadrature points (default 64(n+1))");
  auto* embed = app.add_subcommand("embed", "inclusion constants and membership bounds");
  auto* hb_gram = app.add_subcommand("hb-gram", "dump the monomial Gram matrix of H(b)");
  auto* plot = app.add_subcommand("plot-script", "emit a matplotlib script for a CSV");
  std::string csv_path;
  plot->add_option("csv", csv_path, "CSV produced by norms, scheme-run or lebesgue");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitConfig;
  }
  if (seed_opt->count() > 0) g.seed = seed;

  try {
    if (*plot) {
      const std::string script = cmd_plot_script(g, csv_path);
      emit(g, Config{}, out, script);
      return kExitOk;
    }
    if (*lebesgue) {
      const Config c = load_config(g, false);
      emit(g, c, out, cmd_lebesgue(c, ns, quadrature));
      return kExitOk;
    }
    const Config c = load_config(g);
    std::string text;
    if (*norms) text = cmd_norms(g, c);
    else if (*scheme_run) text = cmd_scheme_run(g, c);
    else if (*embed) text = cmd_embed(g, c);
    else if (*hb_gram) text = cmd_hb_gram(g, c);
    emit(g, c, out, text);
    return kExitOk;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return e.kind() == ErrorKind::kConfigError ? kExitConfig : kExitRuntime;
  } catch (const json::exception& e) {
    err << "error: ConfigError: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitRuntime;
  }
}

}  // namespace polyapprox::cli
