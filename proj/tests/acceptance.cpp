// Acceptance runner: one PASS/FAIL line per criterion, nonzero exit on any
// failure.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "polyapprox/diagnostics.hpp"
#include "polyapprox/embedding.hpp"
#include "polyapprox/errors.hpp"
#include "polyapprox/hb.hpp"
#include "polyapprox/schemes.hpp"
#include "polyapprox/spaces.hpp"
#include "polyapprox_cli/cli.hpp"
#include "properties.hpp"

using namespace polyapprox;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

Outcome c1_hardy_identity() {
  const auto t0 = std::chrono::steady_clock::now();
  const auto h2 = SpaceHandle::hardy(128);
  std::mt19937_64 rng(1);
  double worst = 0.0;
  for (int t = 0; t < 100; ++t) {
    const auto f = oracle::random_poly(rng, 128);
    for (std::size_t n = 0; n <= 64; ++n) {
      worst = std::max(worst, max_coeff_distance(gram_projection(h2, n, f), partial_sum(n, f)));
    }
  }
  const double secs = seconds_since(t0);
  return {worst <= 1e-12 && secs < 5.0,
          "max coeff deviation " + fmt("%.2e", worst) + ", " + fmt("%.2f", secs) + " s"};
}

Outcome c2_cesaro() {
  std::mt19937_64 rng(2);
  double worst = 0.0;
  for (int t = 0; t < 20; ++t) {
    const auto f = oracle::random_poly(rng, 256);
    for (std::size_t n : {0u, 1u, 2u, 17u, 100u, 255u, 256u, 300u}) {
      worst = std::max(worst, max_coeff_distance(cesaro(n, f), cesaro_by_averaging(n, f)));
    }
  }
  const auto s = cesaro(2, TaylorPoly::monomial(2));
  const bool exact = s == TaylorPoly::monomial(2, 1.0 / 3.0);
  return {worst <= 1e-12 && exact,
          "forms agree to " + fmt("%.2e", worst) + ", sigma_2(z^2) = z^2/3 " +
              (exact ? "exactly" : "NOT exactly")};
}

Outcome c3_fejer_contraction() {
  const auto sup = SpaceHandle::sup_circle(16, 128);
  const auto scheme = Scheme::cesaro();
  std::mt19937_64 rng(3);
  double worst = 0.0;
  for (int t = 0; t < 100; ++t) {
    const auto f = oracle::random_poly(rng, 128);
    const double fn = sup.norm(f);
    for (std::size_t n = 0; n <= 128; ++n) worst = std::max(worst, sup.norm(scheme.apply(n, f)) / fn);
  }
  return {worst <= 1.01, "max ||sigma_n f|| / ||f|| = " + fmt("%.6f", worst)};
}

Outcome c4_lebesgue() {
  const auto t0 = std::chrono::steady_clock::now();
  using diagnostics::lebesgue_constant;
  const double l0 = lebesgue_constant(0);
  const double l1 = lebesgue_constant(1);
  const double l10 = lebesgue_constant(10);
  const double l100 = lebesgue_constant(100);
  double drift = 0.0;
  for (std::size_t n : {1u, 10u, 100u}) {
    drift = std::max(drift, std::abs(lebesgue_constant(n) - lebesgue_constant(n, 128 * (n + 1))));
  }
  const double secs = seconds_since(t0);
  const bool ok = l0 == 1.0 && std::abs(l1 - 4.0 / std::numbers::pi) <= 1e-5 &&
                  l100 / l10 >= 1.3 && drift <= 1e-6 && secs < 10.0;
  return {ok, "L0 = " + fmt("%.17g", l0) + ", |L1 - 4/pi| = " +
                  fmt("%.1e", std::abs(l1 - 4.0 / std::numbers::pi)) + ", L100/L10 = " +
                  fmt("%.4f", l100 / l10) + ", doubling drift " + fmt("%.1e", drift) + ", " +
                  fmt("%.2f", secs) + " s"};
}

Outcome c5_gliding_hump() {
  const auto h = diagnostics::gliding_hump(3, 8, 4096);
  const auto p = diagnostics::sup_profile(h.f, 16);
  double ps = 0.0, cs = 0.0;
  for (double v : p.partial) ps = std::max(ps, v);
  for (double v : p.cesaro) cs = std::max(cs, v);
  ps /= p.f_norm;
  cs /= p.f_norm;
  return {ps >= 2.0 && cs <= 1.01, "degree " + std::to_string(*h.f.degree()) +
                                       ", max partial ratio " + fmt("%.4f", ps) +
                                       ", max Cesaro ratio " + fmt("%.4f", cs)};
}

Outcome c6_hb_oracles() {
  const hb::SymbolB half(TaylorPoly{0.0, 0.5});
  const auto d = hb::hb_gram(half, 16);
  const Eigen::MatrixXcd ref = oracle::hb_gram_dense(TaylorPoly{std::sqrt(3.0) / 2.0},
                                                     half.poly(), 16, d.working_horizon());
  Eigen::MatrixXcd closed = Eigen::MatrixXcd::Identity(17, 17) * (4.0 / 3.0);
  closed(0, 0) = 1.0;
  const double dev_oracle = (d.gram().matrix() - ref).cwiseAbs().maxCoeff();
  const double dev_closed = (d.gram().matrix() - closed).cwiseAbs().maxCoeff();

  const hb::SymbolB mid(TaylorPoly{0.5, 0.5});
  const auto m4 = hb::hb_gram(mid, 16, 4);
  const auto m8 = hb::hb_gram(mid, 16, 8);
  const double doubling = (m4.gram().matrix() - m8.gram().matrix()).cwiseAbs().maxCoeff();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(m4.gram().matrix() -
                                                     Eigen::MatrixXcd::Identity(17, 17));
  const double min_eig = es.eigenvalues().minCoeff();
  const bool ok = dev_oracle <= 1e-10 && dev_closed <= 1e-10 && doubling < 1e-6 && min_eig >= -1e-8;
  return {ok, "z/2 vs Toeplitz oracle " + fmt("%.1e", dev_oracle) + ", vs closed form " +
                  fmt("%.1e", dev_closed) + "; (1+z)/2 doubling change " + fmt("%.1e", doubling) +
                  ", min eig(G - I) " + fmt("%.2e", min_eig)};
}

Outcome c7_projection_scheme() {
  const auto space = SpaceHandle::hb(hb::hb_gram(hb::SymbolB(TaylorPoly{0.5, 0.5}), 64));
  const auto scheme = Scheme::projection(space);
  std::mt19937_64 rng(7);
  props::ProjectionCheck total;
  // 100 competitors per stage, over three random inputs.
  for (int t = 0; t < 3; ++t) {
    const auto f = oracle::random_poly(rng, 64);
    const auto c = props::check_projection(scheme, space, f, 24, 100, rng);
    total.competitor_wins += c.competitor_wins;
    total.idempotence = std::max(total.idempotence, c.idempotence);
    total.pythagoras = std::max(total.pythagoras, c.pythagoras);
    total.monotone_breaks += c.monotone_breaks;
    total.degree_ok = total.degree_ok && c.degree_ok;
  }
  const bool suite = total.competitor_wins == 0 && total.idempotence < 1e-10 &&
                     total.pythagoras < 1e-10 && total.monotone_breaks == 0 && total.degree_ok;

  std::vector<TaylorPoly> sample;
  for (Complex q : {Complex(0.5), Complex(-0.6), Complex(0.0, 0.7), Complex(0.8)}) {
    std::vector<Complex> c(65);
    Complex p = 1.0;
    for (auto& v : c) v = p, p *= q;
    sample.emplace_back(std::move(c));
  }
  sample.push_back(oracle::random_poly(rng, 10));
  const auto built = build_scheme_from_approximants(space, sample, 1.0, 20);
  std::size_t bad = 0;
  for (std::size_t n = 0; n <= 20; ++n) {
    if (built.certificate.residuals[n] > 1.0 / (n + 1.0)) ++bad;
  }
  return {suite && bad == 0,
          "competitor wins " + std::to_string(total.competitor_wins) + ", idempotence " +
              fmt("%.1e", total.idempotence) + ", Pythagoras " + fmt("%.1e", total.pythagoras) +
              ", monotone breaks " + std::to_string(total.monotone_breaks) +
              "; certificate d(20) = " + std::to_string(built.certificate.degrees[20]) +
              ", residual[20] = " + fmt("%.2e", built.certificate.residuals[20]) +
              ", violations " + std::to_string(bad)};
}

Outcome c8_embedding() {
  embedding::EmbeddingSpec lin;
  lin.weights = WeightSequence::linear(512);
  embedding::EmbeddingSpec one;
  one.weights = WeightSequence::constant(512);
  const auto x = embedding::built_space(lin);
  const auto norms = x.monomial_norms(512);
  bool exact = true;
  for (std::size_t n = 0; n <= 512; ++n) exact = exact && norms[n] == lin.weights.alpha[n];

  std::mt19937_64 rng(8);
  double iso = 0.0;
  for (int t = 0; t < 1000; ++t) {
    const auto y = oracle::random_poly(rng, 512);
    const embedding::CoefficientVector v(y.coeffs().begin(), y.coeffs().end());
    const double ny = embedding::model_norm(lin, v);
    iso = std::max(iso, std::abs(x.norm(embedding::embed_J(lin, v)) - ny) / ny);
  }
  const double c_one = embedding::inclusion_constant(one, 0.5).value;
  const double c_lin = embedding::inclusion_constant(lin, 0.5).value;
  const auto inc = embedding::verify_inclusion_bound(lin, 1000, 0.5, 8);
  const auto mem = embedding::membership_beyond_disk(
      lin, [](std::size_t n) { return Complex(std::pow(0.5, static_cast<double>(n))); }, 2.0);
  const bool ok = exact && iso <= 1e-12 && std::abs(c_one - 2.0) <= 1e-12 &&
                  std::abs(c_lin - 2.0 * std::numbers::ln2) <= 1e-10 && inc.violations == 0 &&
                  std::abs(mem.norm_bound - 4.0) <= 1e-9;
  return {ok, std::string("monomial norms ") + (exact ? "exact" : "MISMATCH") + ", isometry " +
                  fmt("%.1e", iso) + ", C(1) = " + fmt("%.15g", c_one) + ", C(n+1) - 2 ln 2 = " +
                  fmt("%.1e", c_lin - 2.0 * std::numbers::ln2) + ", inclusion max ratio " +
                  fmt("%.4f", inc.max_ratio) + " (violations " + std::to_string(inc.violations) +
                  "), membership bound " + fmt("%.12f", mem.norm_bound)};
}

Outcome c9_contracts() {
  std::mt19937_64 rng(9);
  const auto hbspace = SpaceHandle::hb(hb::hb_gram(hb::SymbolB(TaylorPoly{0.5, 0.5}), 32));
  const std::vector<TaylorPoly> sample{oracle::random_poly(rng, 32), oracle::random_poly(rng, 16)};
  const std::vector<Scheme> schemes{
      Scheme::partial_sums(),
      Scheme::cesaro(),
      Scheme::array(TriangularArray::vallee_poussin(32)),
      Scheme::projection(hbspace),
      Scheme::projection(SpaceHandle::hardy(32)),
      build_scheme_from_approximants(hbspace, sample, 1.0, 32).scheme};
  std::size_t breaks = 0;
  double lin = 0.0;
  std::string names;
  for (const auto& s : schemes) {
    const auto c = props::check_contract(s, 32, 32, 50, rng);
    breaks += c.degree_breaks;
    lin = std::max(lin, c.linearity);
    names += (names.empty() ? "" : "/") + s.name();
  }
  return {breaks == 0 && lin <= 1e-10, names + ": degree breaks " + std::to_string(breaks) +
                                           ", linearity defect " + fmt("%.1e", lin)};
}

int cli(std::vector<std::string> args, std::string& err) {
  args.insert(args.begin(), "polyapprox");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, e;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, e);
  err = e.str();
  return code;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

Outcome c10_cli() {
  const std::string dir = TEST_TMP_DIR;
  const std::string cfg = dir + "/acceptance_run.json";
  std::ofstream(cfg) << R"({
    "space": {"kind": "hb", "b": [[0.5,0],[0.5,0]], "horizon": 24},
    "scheme": "projection",
    "inputs": [{"name": "rand", "rule": "random", "degree": 24},
               {"name": "harm", "rule": "harmonic"}],
    "n_max": 24})";
  std::string err;
  const int a = cli({"scheme-run", "--config", cfg, "--seed", "11", "--output", dir + "/acc1.csv"}, err);
  const int b = cli({"scheme-run", "--config", cfg, "--seed", "11", "--output", dir + "/acc2.csv"}, err);
  const std::string one = slurp(dir + "/acc1.csv");
  const bool same = a == 0 && b == 0 && !one.empty() && one == slurp(dir + "/acc2.csv");

  const std::string bad = dir + "/acceptance_bad.json";
  std::ofstream(bad) << R"({"space": {"kind": "weighted", "alpha": [1, 2, "three"]}, "n_max": 2})";
  const int code = cli({"norms", "--config", bad}, err);
  const bool named = err.find("space.alpha[2]") != std::string::npos;
  return {same && code == 2 && named,
          std::string("byte-identical reruns: ") + (same ? "yes" : "NO") + "; malformed config exit " +
              std::to_string(code) + ", diagnostic '" +
              err.substr(0, err.find_last_not_of('\n') + 1) + "'"};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"H2 projection equals partial sums", c1_hardy_identity},
      {"Cesaro forms agree", c2_cesaro},
      {"Fejer contraction on the sampled circle", c3_fejer_contraction},
      {"Lebesgue constants", c4_lebesgue},
      {"gliding-hump divergence witness", c5_gliding_hump},
      {"H(b) Gram oracles", c6_hb_oracles},
      {"Gram projection scheme on H((1+z)/2)", c7_projection_scheme},
      {"weighted space with prescribed monomial norms", c8_embedding},
      {"degree and linearity contracts", c9_contracts},
      {"CLI determinism and config errors", c10_cli},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("threw ") + e.what()};
    }
    if (!o.pass) ++failed;
    std::printf("[%s] criterion %zu: %s -- %s\n", o.pass ? "PASS" : "FAIL", i + 1,
                criteria[i].first.c_str(), o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria failed\n", failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
