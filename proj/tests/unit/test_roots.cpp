#include <gtest/gtest.h>

#include <map>
#include <set>

#include "lieharm/error.hpp"
#include "lieharm/pipeline.hpp"

using namespace lieharm;

namespace {

struct Expected {
  int rank;
  int positive;
  std::vector<int> multiplicities;  // multiset over positive roots
};

// restricted root data of the real forms (classical tables)
const std::map<std::string, Expected> kExpected{
    {"sl2", {1, 1, {1}}},
    {"sl3", {2, 3, {1, 1, 1}}},
    {"sl4", {3, 6, {1, 1, 1, 1, 1, 1}}},
    {"su12", {1, 2, {1, 2}}},        // BC1: m_beta = 2, m_2beta = 1
    {"so13", {1, 1, {2}}},           // real hyperbolic 3-space
    {"so23", {2, 4, {1, 1, 1, 1}}},  // split B2
    {"sp4", {2, 4, {1, 1, 1, 1}}},   // split C2
    {"g2split", {2, 6, {1, 1, 1, 1, 1, 1}}},
};

const AlgebraStructure& structure(const std::string& id) {
  static std::map<std::string, AlgebraStructure> cache;
  auto it = cache.find(id);
  if (it == cache.end()) it = cache.emplace(id, analyze_algebra(resolve_algebra(id))).first;
  return it->second;
}

double cartan_entry(const RestrictedRootSystem& s, std::size_t i, std::size_t j) {
  return 2.0 * s.ip(s.simples[i], s.simples[j]) / s.ip(s.simples[j], s.simples[j]);
}

}  // namespace

class RootsPerAlgebra : public ::testing::TestWithParam<std::string> {};

TEST_P(RootsPerAlgebra, RankAndMultiplicities) {
  const auto& s = structure(GetParam());
  const auto& want = kExpected.at(GetParam());
  EXPECT_EQ(s.roots.rank, want.rank);
  EXPECT_EQ(s.a.centralizer_dim, want.rank);
  ASSERT_EQ(s.roots.num_positive, static_cast<std::size_t>(want.positive));
  std::multiset<int> got, expect(want.multiplicities.begin(), want.multiplicities.end());
  for (std::size_t i = 0; i < s.roots.num_positive; ++i) got.insert(s.roots.roots[i].multiplicity);
  EXPECT_EQ(got, expect);
  EXPECT_EQ(s.roots.roots.size(), 2 * s.roots.num_positive);
  EXPECT_EQ(s.roots.simples.size(), static_cast<std::size_t>(want.rank));
}

TEST_P(RootsPerAlgebra, DecompositionResiduals) {
  const auto& s = structure(GetParam());
  EXPECT_LT(root_decomposition_residual(s.algebra, s.roots), 1e-10);
  EXPECT_LT(root_bracket_residual(s.algebra, s.roots), 1e-10);
  EXPECT_LT(s.a.abelian_residual, 1e-10);
}

TEST_P(RootsPerAlgebra, SimpleExpansions) {
  const auto& s = structure(GetParam());
  for (std::size_t i = 0; i < s.roots.num_positive; ++i) {
    const auto& r = s.roots.roots[i];
    Vec rebuilt = Vec::Zero(s.roots.rank);
    int height = 0;
    for (std::size_t k = 0; k < r.simple_coeffs.size(); ++k) {
      EXPECT_GE(r.simple_coeffs[k], 0);
      rebuilt += r.simple_coeffs[k] * s.roots.roots[s.roots.simples[k]].coords;
      height += r.simple_coeffs[k];
    }
    EXPECT_EQ(height, r.height);
    EXPECT_LT((rebuilt - r.coords).norm(), 1e-9);
  }
}

TEST_P(RootsPerAlgebra, ReflectionsPermuteRoots) {
  const auto& s = structure(GetParam());
  for (std::size_t b : s.roots.simples) {
    std::set<std::size_t> image;
    for (std::size_t a = 0; a < s.roots.roots.size(); ++a) {
      const std::size_t r = root_reflection(s.roots, b, a);
      EXPECT_EQ(s.roots.roots[r].multiplicity, s.roots.roots[a].multiplicity);
      image.insert(r);
    }
    EXPECT_EQ(image.size(), s.roots.roots.size());
    EXPECT_EQ(root_reflection(s.roots, b, b), b + s.roots.num_positive);
  }
}

// sum over positive roots of m_alpha <alpha, beta> = (m_beta + 2 m_{2beta}) <beta, beta>
TEST_P(RootsPerAlgebra, TwoRhoPairingOnSimpleRoots) {
  const auto& s = structure(GetParam());
  for (std::size_t b : s.roots.simples) {
    const int m1 = s.roots.roots[b].multiplicity;
    const auto d = s.roots.doubled(b);
    const int m2 = d ? s.roots.roots[*d].multiplicity : 0;
    EXPECT_NEAR(s.roots.two_rho_pairing(b), (m1 + 2 * m2) * s.roots.ip(b, b), 1e-12);
  }
}

TEST_P(RootsPerAlgebra, Lemma1) {
  const auto& s = structure(GetParam());
  for (std::size_t b : s.roots.simples) {
    const auto rep = check_lemma1(s.algebra, s.roots, b);
    EXPECT_TRUE(rep.holds()) << "beta " << b;
    EXPECT_LT(std::abs(rep.weighted_sum), 1e-10);
    if (rep.m_beta % 2 == 1) EXPECT_EQ(rep.m_2beta, 0);
  }
}

INSTANTIATE_TEST_SUITE_P(Catalog, RootsPerAlgebra,
                         ::testing::Values("sl2", "sl3", "sl4", "su12", "so13", "so23", "sp4", "g2split"));

// A2: with B = 6 tr, H_alpha = (E_ii - E_jj)/6, so <alpha, alpha> = 1/3 and
// <alpha1, alpha2> = -1/6
TEST(Roots, A2InnerProducts) {
  const auto& s = structure("sl3");
  const auto& r = s.roots;
  EXPECT_NEAR(r.ip(r.simples[0], r.simples[0]), 1.0 / 3.0, 1e-13);
  EXPECT_NEAR(r.ip(r.simples[1], r.simples[1]), 1.0 / 3.0, 1e-13);
  EXPECT_NEAR(r.ip(r.simples[0], r.simples[1]), -1.0 / 6.0, 1e-13);
  for (std::size_t i = 0; i < r.num_positive; ++i) {
    const Mat h = s.algebra.matrix_of(r.roots[i].h_alpha);
    bool matched = false;
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b) {
        if (a == b) continue;
        Mat want = Mat::Zero(3, 3);
        want(a, a) = 1.0 / 6.0;
        want(b, b) = -1.0 / 6.0;
        matched = matched || (h - want).norm() < 1e-12;
      }
    EXPECT_TRUE(matched) << "root " << i;
  }
}

TEST(Roots, A2SimpleRootOrder) {
  // alpha1 = e1 - e2 comes first: it takes the larger value on H_reg
  const auto& s = structure("sl3");
  const auto& r = s.roots;
  EXPECT_GT(r.roots[r.simples[0]].reg_value, r.roots[r.simples[1]].reg_value);
  EXPECT_EQ(r.roots[2].simple_coeffs, (std::vector<int>{1, 1}));
}

TEST(Roots, CartanMatrices) {
  {
    const auto& r = structure("g2split").roots;
    EXPECT_NEAR(cartan_entry(r, 0, 1) * cartan_entry(r, 1, 0), 3.0, 1e-10);
    const double ratio = r.ip(r.simples[0], r.simples[0]) / r.ip(r.simples[1], r.simples[1]);
    EXPECT_NEAR(std::max(ratio, 1.0 / ratio), 3.0, 1e-10);
  }
  for (const char* id : {"so23", "sp4"}) {
    const auto& r = structure(id).roots;
    EXPECT_NEAR(cartan_entry(r, 0, 1) * cartan_entry(r, 1, 0), 2.0, 1e-10) << id;
  }
  const auto& a3 = structure("sl4").roots;
  EXPECT_NEAR(cartan_entry(a3, 0, 1), -1.0, 1e-10);
  EXPECT_NEAR(cartan_entry(a3, 0, 2), 0.0, 1e-10);
}

TEST(Roots, Lemma1RejectsNonSimple) {
  const auto& s = structure("sl3");
  try {
    check_lemma1(s.algebra, s.roots, 2);  // alpha1 + alpha2
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::InvalidParams);
  }
}

TEST(Roots, SnappedLatticeValues) {
  for (const char* id : {"sl3", "g2split", "su12"}) {
    const auto& r = structure(id).roots;
    for (const auto& root : r.roots)
      for (const auto& v : root.snapped) EXPECT_TRUE(v.has_value()) << id;
  }
}
