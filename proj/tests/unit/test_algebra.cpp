#include <gtest/gtest.h>

#include <functional>
#include <map>
#include <random>

#include "lieharm/algebra.hpp"
#include "lieharm/catalog.hpp"
#include "lieharm/error.hpp"
#include "lieharm/octonion.hpp"

using namespace lieharm;

namespace {

Mat unit(int n, int i, int j) {
  Mat m = Mat::Zero(n, n);
  m(i, j) = 1.0;
  return m;
}

// invariant form of each family as a multiple of the trace form of the realization
const std::map<std::string, double> kTraceFactor{
    {"sl2", 4.0},   // 2n
    {"sl3", 6.0},  {"sl4", 8.0},
    {"su12", 3.0},  // 2(p+q) Re tr, realified trace doubles Re tr
    {"so13", 2.0},  // N - 2
    {"so23", 3.0},  {"sp4", 6.0},  // 2n + 2
    {"g2split", 4.0},  // 4 x trace in the 7-dimensional representation
};

// k dimensions of the maximal compact subalgebras
const std::map<std::string, int> kDimK{{"sl2", 1},  {"sl3", 3},  {"sl4", 6}, {"su12", 4},
                                       {"so13", 3}, {"so23", 4}, {"sp4", 4}, {"g2split", 6}};

}  // namespace

TEST(Algebra, Sl2InnerProductOracle) {
  const LieAlgebra g = realize(resolve_algebra("sl2"));
  Mat h = Mat::Zero(2, 2);
  h(0, 0) = 0.5;
  h(1, 1) = -0.5;
  const Vec hv = g.coords_of(h);
  EXPECT_NEAR(g.inner(hv, hv), 2.0, 1e-14);
  EXPECT_NEAR(g.form(hv, hv), 2.0, 1e-14);

  // [H, E] = 2E for H = diag(1, -1)
  const Vec big_h = 2.0 * hv;
  const Vec e = g.coords_of(unit(2, 0, 1));
  EXPECT_LT((g.bracket(big_h, e) - 2.0 * e).norm(), 1e-14);
}

TEST(Algebra, FormScaleMultipliesInnerProduct) {
  AlgebraSpec spec = resolve_algebra("sl2");
  spec.form_scale = Rational(1, 4);
  const LieAlgebra g = realize(spec);
  Mat h = Mat::Zero(2, 2);
  h(0, 0) = 0.5;
  h(1, 1) = -0.5;
  const Vec hv = g.coords_of(h);
  EXPECT_NEAR(g.inner(hv, hv), 0.5, 1e-14);
}

TEST(Algebra, KillingFormMatchesTraceForm) {
  std::mt19937 rng(1);
  std::normal_distribution<double> d;
  for (const auto& spec : builtin_catalog()) {
    const LieAlgebra g = realize(spec);
    for (int t = 0; t < 5; ++t) {
      Vec x(g.dim()), y(g.dim());
      for (int i = 0; i < g.dim(); ++i) {
        x(i) = d(rng);
        y(i) = d(rng);
      }
      const double trace = (g.matrix_of(x) * g.matrix_of(y)).trace();
      EXPECT_NEAR(g.form(x, y), kTraceFactor.at(spec.id) * trace, 1e-10 * (1 + std::abs(trace))) << spec.id;
    }
  }
}

TEST(Algebra, StructureResidualsVanish) {
  for (const auto& spec : builtin_catalog()) {
    const LieAlgebra g = realize(spec);
    const auto& r = g.residuals();
    for (double v : {r.closure, r.jacobi, r.theta_closure, r.theta_involution, r.theta_automorphism, r.form_symmetry,
                     r.form_invariance, r.gram_symmetry})
      EXPECT_LT(v, 1e-10) << spec.id;
  }
}

TEST(Algebra, CartanDecompositionDimensions) {
  for (const auto& spec : builtin_catalog()) {
    const LieAlgebra g = realize(spec);
    const auto c = cartan_decompose(g);
    EXPECT_EQ(c.dim_k(), kDimK.at(spec.id)) << spec.id;
    EXPECT_EQ(c.dim_k() + c.dim_p(), g.dim());
    EXPECT_LT(std::max({c.kk_residual, c.kp_residual, c.pp_residual}), 1e-10) << spec.id;
    EXPECT_LT(ad_adjointness_residual(g, c), 1e-10) << spec.id;
    const Mat q = c.full_basis();
    EXPECT_LT((q.transpose() * g.gram() * q - Mat::Identity(g.dim(), g.dim())).cwiseAbs().maxCoeff(), 1e-12);
    // theta acts as +1 on k and -1 on p
    EXPECT_LT((g.theta_matrix() * c.k_basis - c.k_basis).cwiseAbs().maxCoeff(), 1e-12);
    EXPECT_LT((g.theta_matrix() * c.p_basis + c.p_basis).cwiseAbs().maxCoeff(), 1e-12);
  }
}

TEST(Algebra, GramIsPositiveDefinite) {
  for (const auto& spec : builtin_catalog()) {
    const LieAlgebra g = realize(spec);
    Eigen::SelfAdjointEigenSolver<Mat> eig(g.gram());
    EXPECT_GT(eig.eigenvalues().minCoeff(), 0.0) << spec.id;
  }
}

TEST(Algebra, RejectsNonClosedBasis) {
  try {
    LieAlgebra g("bad", {unit(2, 0, 1), unit(2, 1, 0)}, {});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotClosedUnderBracket);
  }
}

TEST(Algebra, RejectsThetaUnstableBasis) {
  Mat h = Mat::Zero(2, 2);
  h(0, 0) = 1;
  h(1, 1) = -1;
  try {
    LieAlgebra g("borel", {h, unit(2, 0, 1)}, {});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ThetaNotInvolutive);
  }
}

TEST(Algebra, RejectsNegativeScale) {
  Mat h = Mat::Zero(2, 2);
  h(0, 0) = 1;
  h(1, 1) = -1;
  try {
    LieAlgebra g("neg", {h, unit(2, 0, 1), unit(2, 1, 0)}, {}, -1.0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::InvalidParams);
  }
}

TEST(Algebra, G2IsDerivationAlgebraOfSplitOctonions) {
  const LieAlgebra g = realize(resolve_algebra("g2split"));
  ASSERT_EQ(g.matrix_size(), 8);
  std::mt19937 rng(2);
  std::uniform_real_distribution<double> d(-1, 1);
  auto mul = [](const Vec& x, const Vec& y) {
    Octonion a, b;
    for (int i = 0; i < 8; ++i) {
      a[i] = x(i);
      b[i] = y(i);
    }
    const auto c = split_octonion_multiply(a, b);
    return Vec(Eigen::Map<const Vec>(c.data(), 8));
  };
  for (const Mat& dmat : g.basis()) {
    EXPECT_LT((dmat.col(0)).norm(), 1e-14);  // D(1) = 0
    for (int t = 0; t < 5; ++t) {
      Vec x(8), y(8);
      for (int i = 0; i < 8; ++i) {
        x(i) = d(rng);
        y(i) = d(rng);
      }
      EXPECT_LT((dmat * mul(x, y) - mul(dmat * x, y) - mul(x, dmat * y)).norm(), 1e-12);
    }
  }
}
