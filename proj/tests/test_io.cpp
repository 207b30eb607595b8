#include <gtest/gtest.h>

#include <json.hpp>

#include "polyapprox/errors.hpp"
#include "polyapprox/io.hpp"

using namespace polyapprox;

namespace {

std::string config_error_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kConfigError) << e.what();
    return e.what();
  }
  ADD_FAILURE() << "no Error thrown";
  return {};
}

}  // namespace

TEST(Io, WeightedRulesAndArrays) {
  const auto lin = io::space_from_json(R"({"kind":"weighted","alpha":{"rule":"linear"},"horizon":6})", 512);
  EXPECT_EQ(lin.horizon(), 6u);
  EXPECT_EQ(lin.monomial_norms(6)[6], 7.0);

  const auto arr = io::space_from_json(R"({"kind":"weighted","p":1,"alpha":[1,2,4]})", 512);
  EXPECT_EQ(arr.horizon(), 2u);
  EXPECT_EQ(*arr.exponent(), 1.0);

  const auto geo = io::space_from_json(R"({"kind":"weighted","alpha":{"rule":"geometric","base":2}})", 10);
  EXPECT_EQ(geo.monomial_norms(10)[10], 1024.0);

  const auto h2 = io::space_from_json(R"({"kind":"hardy"})", 33);
  EXPECT_EQ(h2.horizon(), 33u);
}

TEST(Io, SpaceRoundTrips) {
  const std::vector<std::string> docs{
      R"({"kind":"weighted","p":3,"alpha":[1,2,3,4]})",
      R"({"kind":"sup","oversampling":8,"horizon":40})",
      R"({"kind":"gram","matrix":[[[2,0],[0,1]],[[0,-1],[3,0]]]})",
      R"({"kind":"hb","b":[[0.5,0],[0.5,0]],"horizon":6,"working_factor":4})",
  };
  for (const auto& d : docs) {
    const auto s = io::space_from_json(d, 512);
    const auto back = io::space_from_json(io::space_to_json(s), 512);
    EXPECT_EQ(back.kind(), s.kind());
    EXPECT_EQ(back.horizon(), s.horizon());
    const auto n1 = s.monomial_norms(s.horizon());
    const auto n2 = back.monomial_norms(back.horizon());
    for (std::size_t k = 0; k < n1.size(); ++k) EXPECT_NEAR(n1[k], n2[k], 1e-12);
  }
}

TEST(Io, FlatGramFormAndNumbersAsReals) {
  const auto g = io::gram_from_json(R"([[1,0],[0,0],[0,0],4])");
  EXPECT_EQ(g.size(), 2u);
  EXPECT_EQ(g(1, 1), Complex(4.0));
  const auto nested = io::gram_from_json(io::gram_to_json(g));
  EXPECT_EQ(nested.matrix(), g.matrix());
}

TEST(Io, ArraysRoundTrip) {
  const auto a = TriangularArray::vallee_poussin(6);
  const auto b = io::array_from_json(io::array_to_json(a));
  ASSERT_EQ(b.row_count(), 7u);
  for (std::size_t n = 0; n <= 6; ++n) EXPECT_EQ(a.row(n), b.row(n));
  const auto c = io::array_from_json(R"({"rows":[[1],[[0,1],0.5]]})");
  EXPECT_EQ(c.row(1)[0], Complex(0.0, 1.0));
}

TEST(Io, EmbeddingSpec) {
  const auto s = io::embedding_spec_from_json(R"({"alpha":{"rule":"linear"},"p":2,"M":1,"horizon":9})", 512);
  EXPECT_EQ(s.horizon(), 9u);
  EXPECT_EQ(s.weights.alpha[9], 10.0);
  EXPECT_EQ(s.bound, 1.0);
}

TEST(Io, PolyRoundTrip) {
  const TaylorPoly p{Complex(1, -2), 0.0, Complex(0, 3)};
  EXPECT_EQ(io::poly_from_json(io::poly_to_json(p)), p);
}

TEST(Io, ErrorsNameTheField) {
  EXPECT_NE(config_error_of([] { (void)io::space_from_json("{", 8); }).find("space"), std::string::npos);
  EXPECT_NE(config_error_of([] { (void)io::space_from_json(R"({"alpha":[1]})", 8); }).find("space.kind"),
            std::string::npos);
  EXPECT_NE(config_error_of([] { (void)io::space_from_json(R"({"kind":"banach"})", 8); }).find("space.kind"),
            std::string::npos);
  EXPECT_NE(config_error_of([] { (void)io::space_from_json(R"({"kind":"weighted","alpha":[1,"x"]})", 8); })
                .find("space.alpha[1]"),
            std::string::npos);
  EXPECT_NE(config_error_of([] { (void)io::space_from_json(R"({"kind":"weighted","alpha":[1,2],"horizon":5})", 8); })
                .find("space.alpha"),
            std::string::npos);
  EXPECT_NE(config_error_of([] { (void)io::space_from_json(R"({"kind":"weighted","p":0.5,"alpha":[1]})", 8); })
                .find("space.p"),
            std::string::npos);
  EXPECT_NE(config_error_of([] { (void)io::space_from_json(R"({"kind":"hb","b":[[0.5]]})", 8); }).find("space.b[0]"),
            std::string::npos);
  EXPECT_NE(config_error_of([] { (void)io::array_from_json(R"({"rows":[[1],[1]]})"); }).find("array.rows[1]"),
            std::string::npos);
  EXPECT_NE(config_error_of([] { (void)io::gram_from_json(R"([[1,0],[0,0],[0,0]])"); }).find("matrix"),
            std::string::npos);
  EXPECT_NE(config_error_of([] { (void)io::embedding_spec_from_json(R"({"alpha":{"rule":"cubic"}})", 8); })
                .find("spec.alpha.rule"),
            std::string::npos);
}
