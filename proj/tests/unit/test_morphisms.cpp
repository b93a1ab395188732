#include <gtest/gtest.h>

#include <functional>
#include <map>

#include "lieharm/error.hpp"
#include "lieharm/pipeline.hpp"

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

}  // namespace

TEST(Phi, IdentityMapsToI) {
  for (const char* id : {"sl2", "sl3", "su12", "g2split"}) {
    const auto& s = structure(id);
    const auto ctx = build_beta_context(s, 0);
    const auto phi = build_phi(s.group, ctx.rankone);
    const auto v = phi(s.group.identity());
    const auto want = phi.variant == PhiVariant::MultOne ? std::complex<double>(0, 1) : std::complex<double>(0, 0);
    EXPECT_LT(std::abs(v - want), 1e-15) << id;
  }
}

TEST(Phi, Sl2UpperHalfPlane) {
  const auto& s = structure("sl2");
  const auto ctx = build_beta_context(s, 0);
  const auto phi = build_phi(s.group, ctx.rankone);
  EXPECT_EQ(phi.variant, PhiVariant::MultOne);
  EXPECT_LT(phi.normalization_residual, 1e-12);
  for (const auto& p : sample_points(s.group, 50, 1)) EXPECT_GT(phi(p).imag(), 0.0);
  // unit X along g_beta: real part is <beta,beta>^{1/2} times the coordinate
  const GroupPoint p{Vec::Constant(1, 1.0), Vec::Zero(1)};
  EXPECT_NEAR(std::abs(phi(p).real()), std::sqrt(0.5), 1e-14);
  EXPECT_NEAR(phi(p).imag(), 1.0, 1e-15);
}

TEST(Phi, VariantSelection) {
  const auto& su = structure("su12");
  const auto ctx = build_beta_context(su, 0);
  const auto iso = build_phi(su.group, ctx.rankone);
  EXPECT_EQ(iso.variant, PhiVariant::Isotropic);
  EXPECT_LT(iso.normalization_residual, 1e-12);
  // <X,X> = 0 in the complex-bilinear pairing
  const double re = iso.x_re.dot(su.algebra.gram() * iso.x_re) - iso.x_im.dot(su.algebra.gram() * iso.x_im);
  const double im = 2.0 * iso.x_re.dot(su.algebra.gram() * iso.x_im);
  EXPECT_NEAR(re, 0.0, 1e-14);
  EXPECT_NEAR(im, 0.0, 1e-14);
  EXPECT_EQ(code_of([&] { build_phi(su.group, ctx.rankone, PhiVariant::MultOne); }), ErrorCode::MultiplicityMismatch);

  const auto& sl = structure("sl3");
  const auto c3 = build_beta_context(sl, 0);
  EXPECT_EQ(code_of([&] { build_phi(sl.group, c3.rankone, PhiVariant::Isotropic); }), ErrorCode::NoIsotropicVector);
}

TEST(Phi, HarmonicMorphismOnSl3) {
  const auto& s = structure("sl3");
  const auto ctx = build_beta_context(s, 0);
  const auto phi = build_phi(s.group, ctx.rankone);
  const auto pts = sample_points(s.group, 100, 7);
  const auto rep = check_harmonic_morphism(pullback(ctx.projection, phi), ctx.source, s.group, pts);
  EXPECT_LT(rep.max_laplacian, 1e-5);
  EXPECT_LT(rep.max_conformality, 1e-5);
  EXPECT_GT(rep.nonconstancy, 0.1);
}

TEST(Phi, ConstantFunctionHasZeroResiduals) {
  const auto& s = structure("sl3");
  const auto ctx = build_beta_context(s, 1);
  const ScalarFunction c = [](const GroupPoint&) { return std::complex<double>(2.0, -1.0); };
  const auto rep = check_harmonic_morphism(c, ctx.source, s.group, sample_points(s.group, 10, 1));
  EXPECT_EQ(rep.max_laplacian, 0.0);
  EXPECT_EQ(rep.max_conformality, 0.0);
  EXPECT_EQ(rep.nonconstancy, 0.0);
}

TEST(Phi, IsotropicHarmonicMorphismOnSu12) {
  const auto& s = structure("su12");
  const auto ctx = build_beta_context(s, 0);
  const auto phi = build_phi(s.group, ctx.rankone);
  const auto rep = check_harmonic_morphism(phi, ctx.target, s.group, sample_points(s.group, 50, 3));
  EXPECT_LT(rep.max_laplacian, 1e-5);
  EXPECT_LT(rep.max_conformality, 1e-5);
  EXPECT_GT(rep.nonconstancy, 0.1);
}

TEST(Intertwining, TrivialAndRadial) {
  const auto& s = structure("sp4");
  for (std::size_t b = 0; b < 2; ++b) {
    const auto ctx = build_beta_context(s, b);
    const auto pts = sample_points(s.group, 20, 5);
    const ScalarFunction one = [](const GroupPoint&) { return std::complex<double>(1.0); };
    EXPECT_LT(check_intertwining(ctx.projection, ctx.source, ctx.target, s.group, one, pts), 1e-12);
    const Vec ba = s.group.split(ctx.rankone.h_beta).first.H;
    const ScalarFunction e = [ba](const GroupPoint& q) { return std::complex<double>(std::exp(0.5 * ba.dot(q.H))); };
    EXPECT_LT(check_intertwining(ctx.projection, ctx.source, ctx.target, s.group, e, pts), 1e-6);
  }
}

TEST(Eigenfunctions, HarmonicExponent) {
  for (const char* id : {"sl3", "su12", "so13"}) {
    const auto& s = structure(id);
    const auto ctx = build_beta_context(s, 0);
    const double sv = ctx.rankone.m_beta + 2 * ctx.rankone.m_2beta;
    const auto rep =
        check_eigenfunction_pullback(ctx.rankone, ctx.projection, ctx.source, s.group, sv, sample_points(s.group, 20, 1));
    EXPECT_NEAR(rep.lambda, 0.0, 1e-14) << id;
    EXPECT_NEAR(rep.mu, 2.0 * ctx.rankone.beta_norm2 * sv * sv, 1e-12) << id;
    EXPECT_LT(rep.max_eigen_residual, 1e-5) << id;
    EXPECT_LT(rep.max_square_residual, 1e-5) << id;
  }
}

TEST(Eigenfunctions, GenericExponent) {
  // m_beta = 1, s = 1: lambda = 0, mu = 2 <b,b>; s = 3: lambda = 6 <b,b>
  const auto& s = structure("sl3");
  const auto ctx = build_beta_context(s, 0);
  const auto pts = sample_points(s.group, 10, 2);
  const double bb = ctx.rankone.beta_norm2;
  auto rep = check_eigenfunction_pullback(ctx.rankone, ctx.projection, ctx.source, s.group, 1.0, pts);
  EXPECT_NEAR(rep.mu, 2.0 * bb, 1e-14);
  rep = check_eigenfunction_pullback(ctx.rankone, ctx.projection, ctx.source, s.group, 3.0, pts);
  EXPECT_NEAR(rep.lambda, 6.0 * bb, 1e-14);
  EXPECT_LT(rep.max_eigen_residual, 1e-5);
  EXPECT_LT(rep.max_square_residual, 1e-5);
  EXPECT_EQ(code_of([&] { check_eigenfunction_pullback(ctx.rankone, ctx.projection, ctx.source, s.group, 0.0, pts); }),
            ErrorCode::DegenerateS);
}

TEST(RHarmonic, ExactModeUpToSix) {
  for (const auto& spec : builtin_catalog()) {
    const auto& s = structure(spec.id);
    const auto ctx = build_beta_context(s, 0);
    for (int r = 1; r <= 6; ++r) {
      const auto rep =
          check_r_harmonic_pullback(s.roots, ctx.rankone, ctx.projection, ctx.source, s.group, r, {}, false);
      EXPECT_TRUE(rep.exact_vanishes) << spec.id << " r=" << r;
      EXPECT_TRUE(rep.exact_nonzero) << spec.id << " r=" << r;
      EXPECT_TRUE(rep.holds(1e-4));
    }
  }
}

TEST(RHarmonic, WitnessSubstitutionForOrderOne) {
  const auto& s = structure("su12");
  const auto ctx = build_beta_context(s, 0);
  const auto rep = check_r_harmonic_pullback(s.roots, ctx.rankone, ctx.projection, ctx.source, s.group, 1, {}, false);
  EXPECT_EQ(rep.witness, "exp(4 t)");
  const auto rep3 = check_r_harmonic_pullback(s.roots, ctx.rankone, ctx.projection, ctx.source, s.group, 3, {}, false);
  EXPECT_EQ(rep3.witness, "t^2");
}

TEST(RHarmonic, NumericalCrossCheck) {
  const auto& s = structure("g2split");
  const auto ctx = build_beta_context(s, 1);
  const auto pts = sample_points(s.group, 20, 4);
  for (int r = 1; r <= 2; ++r) {
    const auto rep = check_r_harmonic_pullback(s.roots, ctx.rankone, ctx.projection, ctx.source, s.group, r, pts, true);
    ASSERT_EQ(rep.numeric_residuals.size(), static_cast<std::size_t>(r));
    EXPECT_TRUE(rep.holds(1e-4));
  }
}

TEST(RHarmonic, OrderOutOfRange) {
  const auto& s = structure("sl2");
  const auto ctx = build_beta_context(s, 0);
  const auto run = [&](int r, bool numeric) {
    check_r_harmonic_pullback(s.roots, ctx.rankone, ctx.projection, ctx.source, s.group, r, {}, numeric);
  };
  EXPECT_EQ(code_of([&] { run(0, false); }), ErrorCode::OrderOutOfRange);
  EXPECT_EQ(code_of([&] { run(5, true); }), ErrorCode::OrderOutOfRange);
  EXPECT_NO_THROW(run(9, false));
}
