#include <gtest/gtest.h>

#include "oracles.hpp"
#include "polyapprox/errors.hpp"
#include "polyapprox/schemes.hpp"
#include "properties.hpp"

using namespace polyapprox;

namespace {

SpaceHandle midpoint_hb(std::size_t horizon) {
  return SpaceHandle::hb(hb::hb_gram(hb::SymbolB(TaylorPoly{0.5, 0.5}), horizon));
}

}  // namespace

TEST(Cesaro, ClosedFormAndAveragingAgree) {
  EXPECT_EQ(cesaro(2, TaylorPoly::monomial(2)), TaylorPoly::monomial(2, 1.0 / 3.0));
  std::mt19937_64 rng(2);
  for (int t = 0; t < 20; ++t) {
    const auto f = oracle::random_poly(rng, 40);
    for (std::size_t n : {0u, 1u, 7u, 39u, 40u, 60u}) {
      EXPECT_LT(max_coeff_distance(cesaro(n, f), cesaro_by_averaging(n, f)), 1e-12);
    }
  }
}

TEST(PartialSum, Truncates) {
  const TaylorPoly f{1.0, 2.0, 3.0};
  EXPECT_EQ(partial_sum(1, f), (TaylorPoly{1.0, 2.0}));
  EXPECT_EQ(partial_sum(9, f), f);
}

TEST(TriangularArray, Validation) {
  EXPECT_THROW(TriangularArray({{1.0}, {1.0}}), Error);
  const auto a = TriangularArray::cesaro(3);
  try {
    (void)a.row(4);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kMissingRow);
  }
}

TEST(TriangularArray, BuiltinsMatchDirectSchemes) {
  std::mt19937_64 rng(9);
  const auto ps = TriangularArray::partial_sums(30);
  const auto cs = TriangularArray::cesaro(30);
  for (int t = 0; t < 10; ++t) {
    const auto f = oracle::random_poly(rng, 30);
    for (std::size_t n = 0; n <= 30; n += 3) {
      EXPECT_LT(max_coeff_distance(apply_array(ps, n, f), partial_sum(n, f)), 1e-13);
      EXPECT_LT(max_coeff_distance(apply_array(cs, n, f), cesaro(n, f)), 1e-13);
    }
  }
}

TEST(TriangularArray, ValleePoussinReproducesLowDegree) {
  const auto vp = TriangularArray::vallee_poussin(40);
  std::mt19937_64 rng(10);
  for (std::size_t n = 1; n <= 40; ++n) {
    const auto p = oracle::random_poly(rng, n / 2);
    EXPECT_LT(max_coeff_distance(apply_array(vp, n, p), p), 1e-13) << n;
    // Odd rows: 2 sigma_{2m+1} - sigma_m.
    if (n % 2 == 1) {
      const auto f = oracle::random_poly(rng, 45);
      const auto expect = subtract(scale(2.0, cesaro(n, f)), cesaro(n / 2, f));
      EXPECT_LT(max_coeff_distance(apply_array(vp, n, f), expect), 1e-12);
    }
  }
}

TEST(GramProjection, HardyIsPartialSum) {
  const auto h2 = SpaceHandle::hardy(32);
  std::mt19937_64 rng(1);
  const auto f = oracle::random_poly(rng, 32);
  for (std::size_t n = 0; n <= 32; ++n) {
    EXPECT_LT(max_coeff_distance(gram_projection(h2, n, f), partial_sum(n, f)), 1e-12);
  }
  EXPECT_THROW((void)gram_projection(SpaceHandle::sup_circle(16, 8), 2, f.resized(9)), Error);
}

TEST(GramProjection, PropertySuiteOnHb) {
  const auto space = midpoint_hb(24);
  const auto scheme = Scheme::projection(space);
  std::mt19937_64 rng(17);
  for (int t = 0; t < 3; ++t) {
    const auto f = oracle::random_poly(rng, 24);
    const auto c = props::check_projection(scheme, space, f, 24, 20, rng);
    EXPECT_EQ(c.competitor_wins, 0u);
    EXPECT_LT(c.idempotence, 1e-10);
    EXPECT_LT(c.pythagoras, 1e-10);
    EXPECT_EQ(c.monotone_breaks, 0u);
    EXPECT_TRUE(c.degree_ok);
  }
}

TEST(ProjectionScheme, RequiresHilbert) {
  try {
    (void)Scheme::projection(SpaceHandle::sup_circle());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kNotAHilbertSpace);
  }
}

TEST(Approximants, CertificateMeetsTargets) {
  const auto space = midpoint_hb(48);
  std::vector<TaylorPoly> sample;
  for (double q : {0.5, -0.6, 0.7}) {
    std::vector<Complex> c(49);
    double p = 1.0;
    for (auto& v : c) v = p, p *= q;
    sample.emplace_back(std::move(c));
  }
  const auto built = build_scheme_from_approximants(space, sample, 1.0, 15);
  const auto& cert = built.certificate;
  ASSERT_EQ(cert.degrees.size(), 16u);
  EXPECT_EQ(cert.bound, 1.0);
  for (std::size_t n = 0; n <= 15; ++n) {
    EXPECT_LE(cert.residuals[n], 1.0 / (n + 1.0));
    EXPECT_EQ(cert.sample_counts[n], std::min<std::size_t>(n + 1, 3));
    if (n) EXPECT_GE(cert.degrees[n], cert.degrees[n - 1]);
  }
  // Re-indexed stages keep deg T_n f <= n.
  std::mt19937_64 rng(3);
  const auto f = oracle::random_poly(rng, 48);
  for (std::size_t n = 0; n <= 48; ++n) {
    const auto t = built.scheme.apply(n, f);
    if (t.degree()) EXPECT_LE(*t.degree(), n);
  }
}

TEST(Approximants, Errors) {
  const auto space = SpaceHandle::hardy(4);
  const std::vector<TaylorPoly> sample{TaylorPoly{1.0, 1.0, 1.0, 1.0, 1.0}};
  EXPECT_NO_THROW((void)build_scheme_from_approximants(space, sample, 1.0, 10));
  auto expect_kind = [](auto fn, ErrorKind k) {
    try {
      fn();
      ADD_FAILURE() << "no throw";
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), k) << e.what();
    }
  };
  expect_kind([&] { (void)build_scheme_from_approximants(SpaceHandle::sup_circle(), sample, 1.0, 3); },
              ErrorKind::kNotAHilbertSpace);
  expect_kind([&] { (void)build_scheme_from_approximants(space, {}, 1.0, 3); },
              ErrorKind::kInvalidArgument);
  expect_kind([&] { (void)build_scheme_from_approximants(space, sample, 0.5, 3); },
              ErrorKind::kInvalidArgument);
  expect_kind([&] { (void)build_scheme_from_approximants(SpaceHandle::hardy(1), {TaylorPoly{1.0, 1.0, 1.0}}, 1.0, 2); },
              ErrorKind::kDegreeExceedsHorizon);
}

TEST(Schemes, DegreeAndLinearityContracts) {
  std::mt19937_64 rng(44);
  const auto hbspace = midpoint_hb(20);
  std::vector<TaylorPoly> sample{oracle::random_poly(rng, 20), oracle::random_poly(rng, 20)};
  const std::vector<Scheme> schemes{
      Scheme::partial_sums(), Scheme::cesaro(),
      Scheme::array(TriangularArray::vallee_poussin(20)), Scheme::projection(hbspace),
      build_scheme_from_approximants(hbspace, sample, 1.0, 20).scheme};
  for (const auto& s : schemes) {
    const auto c = props::check_contract(s, 20, 20, 30, rng);
    EXPECT_EQ(c.degree_breaks, 0u) << s.name();
    EXPECT_LT(c.linearity, 1e-10) << s.name();
  }
}

TEST(ErrorCurve, HardyGeometricStrictlyDecreasing) {
  const auto h2 = SpaceHandle::hardy(40);
  std::vector<Complex> c(41);
  double p = 1.0;
  for (auto& v : c) v = p, p *= 0.5;
  const TaylorPoly f(c);
  const auto curve = scheme_error_curve(Scheme::partial_sums(), h2, f, 39);
  for (std::size_t n = 1; n < curve.size(); ++n) {
    EXPECT_LT(curve[n].error_norm, curve[n - 1].error_norm);
  }
  // Closed-form tail: sum_{k>n} 4^{-k} over k <= 40.
  double tail = 0.0;
  for (std::size_t k = 11; k <= 40; ++k) tail += std::pow(0.25, k);
  EXPECT_NEAR(curve[10].error_norm, std::sqrt(tail), 1e-15);
  EXPECT_THROW((void)scheme_error_curve(Scheme::partial_sums(), h2, f, 41), Error);
}

TEST(Scheme, MultipliersAndNames) {
  EXPECT_EQ(Scheme::partial_sums().name(), "partial");
  EXPECT_EQ(Scheme::cesaro().name(), "cesaro");
  const auto m = Scheme::cesaro().multipliers(3);
  ASSERT_TRUE(m);
  EXPECT_DOUBLE_EQ((*m)[1].real(), 0.75);
  EXPECT_FALSE(Scheme::projection(SpaceHandle::hardy(4)).multipliers(2));
}
