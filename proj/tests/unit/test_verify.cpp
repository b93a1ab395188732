#include <gtest/gtest.h>

#include <functional>
#include <map>
#include <regex>
#include <set>

#include "lieharm/error.hpp"
#include "lieharm/verify.hpp"

using namespace lieharm;

namespace {

const AlgebraStructure& structure(const std::string& id) {
  static std::map<std::string, AlgebraStructure> cache;
  auto it = cache.find(id);
  if (it == cache.end()) it = cache.emplace(id, analyze_algebra(resolve_algebra(id))).first;
  return it->second;
}

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no lieharm::Error thrown";
  return ErrorCode::EvaluationFailure;
}

std::string strip_timestamps(const std::string& s) {
  static const std::regex ts(R"re("(started|finished)": "[^"]*")re");
  return std::regex_replace(s, ts, "\"$1\": \"\"");
}

}  // namespace

TEST(Verify, ParseSuites) {
  EXPECT_EQ(parse_suites("all").size(), 5u);
  EXPECT_EQ(parse_suites("lemma1"), std::vector<Suite>{Suite::Lemma1});
  EXPECT_EQ(code_of([] { parse_suites("everything"); }), ErrorCode::MalformedInput);
}

TEST(Verify, SectionsAppearOncePerBeta) {
  VerifyOptions o;
  o.samples = 5;
  o.all_betas = true;
  const auto rep = run_verification(structure("sl3"), o);
  std::set<std::pair<std::string, long>> seen;
  for (const auto& c : rep.sections) {
    const bool fresh = seen.insert({c.name, c.beta ? static_cast<long>(*c.beta) : -1L}).second;
    EXPECT_TRUE(fresh) << c.name;
  }
  EXPECT_EQ(rep.betas, (std::vector<std::size_t>{0, 1}));
  EXPECT_TRUE(rep.pass());
}

TEST(Verify, StructureSuiteOnly) {
  VerifyOptions o;
  o.checks = "structure";
  const auto rep = run_verification(structure("g2split"), o);
  for (const auto& c : rep.sections) EXPECT_FALSE(c.beta.has_value()) << c.name;
  EXPECT_TRUE(rep.pass());
}

TEST(Verify, JsonIsDeterministicModuloTimestamps) {
  VerifyOptions o;
  o.samples = 8;
  o.seed = 7;
  o.checks = "morphism";
  const auto a = to_json(run_verification(structure("sl3"), o));
  const auto b = to_json(run_verification(structure("sl3"), o));
  EXPECT_EQ(strip_timestamps(a), strip_timestamps(b));
  EXPECT_NE(a.find("\"schema\": \"lieharm-report/1\""), std::string::npos);
  EXPECT_NE(a.find("\"overall\": \"pass\""), std::string::npos);
  o.seed = 8;
  EXPECT_NE(strip_timestamps(to_json(run_verification(structure("sl3"), o))), strip_timestamps(a));
}

TEST(Verify, Sl3FibreSectionReportsNonzeroValues) {
  VerifyOptions o;
  o.checks = "submersion";
  o.samples = 5;
  const auto rep = run_verification(structure("sl3"), o);
  const auto it = std::find_if(rep.sections.begin(), rep.sections.end(),
                               [](const auto& c) { return c.name == "fibre_second_fundamental"; });
  ASSERT_NE(it, rep.sections.end());
  EXPECT_TRUE(it->pass);
  ASSERT_EQ(it->values.size(), 2u);
  EXPECT_NEAR(it->values[0].second, -1.0 / 6.0, 1e-12);
  EXPECT_NEAR(it->values[1].second, 1.0 / 6.0, 1e-12);
}

TEST(Verify, Sl2TensionSectionIsEmptyKernel) {
  VerifyOptions o;
  o.checks = "submersion";
  o.samples = 5;
  const auto rep = run_verification(structure("sl2"), o);
  const auto it = std::find_if(rep.sections.begin(), rep.sections.end(),
                               [](const auto& c) { return c.name == "tension_traces"; });
  ASSERT_NE(it, rep.sections.end());
  EXPECT_EQ(it->residual, 0.0);
  EXPECT_EQ(it->note, "empty kernel");
}

TEST(Verify, AnalysisJson) {
  const auto j = analysis_json(structure("su12"));
  EXPECT_NE(j.find("\"m_2beta\": 1"), std::string::npos);
  EXPECT_NE(j.find("\"dim_M_beta\": 4"), std::string::npos);
  EXPECT_NE(j.find("\"hyperbolic_type\": \"complex\""), std::string::npos);
}

TEST(Eval, PointParsing) {
  const auto& g = structure("sl3").group;
  const auto p = parse_point(g, R"({"X": [1, 2, 3], "H": [0.5, -0.5]})");
  EXPECT_EQ(p.X(2), 3.0);
  EXPECT_EQ(p.H(1), -0.5);
  EXPECT_EQ(code_of([&] { parse_point(g, R"({"X": [1, 2], "H": [0, 0]})"); }), ErrorCode::MalformedInput);
  EXPECT_EQ(code_of([&] { parse_point(g, R"({"X": [1, 2, "a"], "H": [0, 0]})"); }), ErrorCode::MalformedInput);
  EXPECT_EQ(code_of([&] { parse_point(g, "[1,2]"); }), ErrorCode::MalformedInput);
  EXPECT_EQ(code_of([&] { parse_point(g, "{"); }), ErrorCode::MalformedInput);
}

TEST(Eval, MapsAtSpecialPoints) {
  const auto& s = structure("sl3");
  const auto ctx = build_beta_context(s, 0);
  const auto id = s.group.identity();
  EXPECT_EQ(format_complex(evaluate_map(s, ctx, "phi", id)), "0+1i");
  EXPECT_EQ(format_complex(evaluate_map(s, ctx, "pullback:eigen", id)), "1+0i");
  // a point of ker pi lands on the target identity
  const auto k = s.group.split(ctx.projection.kernel_basis.col(0)).first;
  const auto v = evaluate_map(s, ctx, "pullback:phi", s.group.exp(k.X, k.H));
  EXPECT_LT(std::abs(v - std::complex<double>(0, 1)), 1e-14);
  EXPECT_EQ(code_of([&] { evaluate_map(s, ctx, "psi", id); }), ErrorCode::MalformedInput);
  EXPECT_EQ(code_of([&] { evaluate_map(s, ctx, "pullback:nope", id); }), ErrorCode::MalformedInput);
}

TEST(Eval, FormatComplex) {
  EXPECT_EQ(format_complex({0.0, 1.0}), "0+1i");
  EXPECT_EQ(format_complex({-0.0, -2.5}), "0-2.5i");
  EXPECT_EQ(format_complex({1.0 / 3.0, 0.0}), "0.333333333333333+0i");
}
