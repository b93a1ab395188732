#include <gtest/gtest.h>

#include <functional>
#include <map>

#include "lieharm/catalog.hpp"
#include "lieharm/error.hpp"

using namespace lieharm;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no lieharm::Error thrown";
  return ErrorCode::EvaluationFailure;
}

}  // namespace

TEST(Catalog, BuiltinIds) {
  std::vector<std::string> ids;
  for (const auto& s : builtin_catalog()) ids.push_back(s.id);
  EXPECT_EQ(ids, (std::vector<std::string>{"sl2", "sl3", "sl4", "su12", "so13", "so23", "sp4", "g2split"}));
}

// dimensions from the classical formulas
TEST(Catalog, RealizationDimensions) {
  const std::map<std::string, int> expected{{"sl2", 3},  {"sl3", 8},  {"sl4", 15}, {"su12", 8},
                                            {"so13", 6}, {"so23", 10}, {"sp4", 10}, {"g2split", 14}};
  for (const auto& s : builtin_catalog()) EXPECT_EQ(realize(s).dim(), expected.at(s.id)) << s.id;
}

TEST(Catalog, FamilyNamesRoundTrip) {
  for (Family f : {Family::SlReal, Family::SuPq, Family::SoPq, Family::SpReal, Family::G2Split})
    EXPECT_EQ(family_from_string(to_string(f)), f);
  EXPECT_FALSE(family_from_string("e8_split"));
}

TEST(Catalog, ValidateRejectsBadParams) {
  EXPECT_EQ(code_of([] { validate({"x", Family::SlReal, {1}, Rational(1)}); }), ErrorCode::InvalidParams);
  EXPECT_EQ(code_of([] { validate({"x", Family::SoPq, {1, 1}, Rational(1)}); }), ErrorCode::InvalidParams);
  EXPECT_EQ(code_of([] { validate({"x", Family::SuPq, {2, 1}, Rational(1)}); }), ErrorCode::InvalidParams);
  EXPECT_EQ(code_of([] { validate({"x", Family::G2Split, {2}, Rational(1)}); }), ErrorCode::InvalidParams);
  EXPECT_EQ(code_of([] { validate({"x", Family::SlReal, {3}, Rational(-1)}); }), ErrorCode::InvalidParams);
}

TEST(Catalog, ParseJson) {
  const auto specs = parse_catalog_json(R"([
    {"id": "sl5", "family": "sl_real", "params": [5]},
    {"id": "su13h", "family": "su_pq", "params": [1, 3], "form_scale": "1/2"},
    {"id": "so14", "family": "so_pq", "params": [1, 4], "form_scale": 3}
  ])");
  ASSERT_EQ(specs.size(), 3u);
  EXPECT_EQ(specs[1].form_scale, Rational(1, 2));
  EXPECT_EQ(specs[2].form_scale, Rational(3));
  EXPECT_EQ(specs[0].params, std::vector<int>{5});
}

TEST(Catalog, ParseErrors) {
  EXPECT_EQ(code_of([] { parse_catalog_json("{"); }), ErrorCode::MalformedInput);
  EXPECT_EQ(code_of([] { parse_catalog_json(R"({"id":"a"})"); }), ErrorCode::MalformedInput);
  EXPECT_EQ(code_of([] { parse_catalog_json(R"([{"id":"a","family":"e6_split"}])"); }),
            ErrorCode::UnsupportedFamily);
  EXPECT_EQ(code_of([] { parse_catalog_json(R"([{"id":"a","family":"sl_real","params":[1]}])"); }),
            ErrorCode::InvalidParams);
  EXPECT_EQ(code_of([] { parse_catalog_json(R"([{"id":"a","family":"sl_real","params":[3],"form_scale":"1/0"}])"); }),
            ErrorCode::MalformedInput);
}

TEST(Catalog, Resolve) {
  EXPECT_EQ(resolve_algebra("su12").family, Family::SuPq);
  const std::vector<AlgebraSpec> extra{{"sl3", Family::SlReal, {3}, Rational(1, 6)}};
  EXPECT_EQ(resolve_algebra("sl3", extra).form_scale, Rational(1, 6));
  EXPECT_EQ(code_of([] { resolve_algebra("e8"); }), ErrorCode::UnknownAlgebra);
}

TEST(Catalog, MissingFile) {
  EXPECT_THROW(load_catalog_file("/nonexistent/catalog.json"), Error);
}
