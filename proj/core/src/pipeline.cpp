#include "lieharm/pipeline.hpp"

#include <cmath>
#include <random>

#include "lieharm/error.hpp"

namespace lieharm {
namespace {

std::mt19937_64 make_rng(std::uint64_t seed, const std::vector<std::uint64_t>& salt) {
  std::vector<std::uint32_t> words{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)};
  for (auto s : salt) {
    words.push_back(static_cast<std::uint32_t>(s));
    words.push_back(static_cast<std::uint32_t>(s >> 32));
  }
  std::seed_seq seq(words.begin(), words.end());
  return std::mt19937_64(seq);
}

// uniform_real_distribution is implementation-defined; this keeps samples
// identical across standard libraries
double uniform(std::mt19937_64& rng, double lo, double hi) {
  const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
  return lo + (hi - lo) * u;
}

}  // namespace

AlgebraStructure analyze_algebra(const AlgebraSpec& spec) {
  LieAlgebra g = realize(spec);
  CartanDecomposition cartan = cartan_decompose(g);
  MaximalAbelian a = maximal_abelian(g, cartan);
  RestrictedRootSystem roots = extract_roots(g, cartan, a);
  NAGroup group(g, roots);
  return {spec, std::move(g), std::move(cartan), std::move(a), std::move(roots), std::move(group)};
}

BetaContext build_beta_context(const AlgebraStructure& s, std::size_t simple) {
  if (simple >= s.roots.simples.size())
    throw Error(ErrorCode::InvalidParams, "beta index " + std::to_string(simple) + " out of range (rank " +
                                              std::to_string(s.roots.simples.size()) + ")");
  const std::size_t beta = s.roots.simples[simple];
  RankOneData r = build_rank_one(s.algebra, s.cartan, s.roots, beta);
  SubmersionProjection pi = build_projection(s.algebra, s.roots, r, s.group);
  LeftInvariantGeometry source(s.algebra, s.group, pi.source_frame);
  LeftInvariantGeometry target(s.algebra, s.group, pi.target_basis);
  const RadialOperator up = radial_operator(s.roots, beta);
  const RadialOperator down = radial_operator_target(r);
  return {simple, std::move(r), std::move(pi), std::move(source), std::move(target), up, down};
}

std::vector<GroupPoint> sample_points(const NAGroup& group, std::size_t count, std::uint64_t seed,
                                      std::vector<std::uint64_t> salt, double box) {
  auto rng = make_rng(seed, salt);
  std::vector<GroupPoint> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    GroupPoint p{Vec(group.dim_n()), Vec(group.rank())};
    for (Eigen::Index k = 0; k < p.X.size(); ++k) p.X(k) = uniform(rng, -box, box);
    for (Eigen::Index k = 0; k < p.H.size(); ++k) p.H(k) = uniform(rng, -box, box);
    out.push_back(std::move(p));
  }
  return out;
}

std::vector<Vec> sample_vectors(int dim, std::size_t count, std::uint64_t seed, std::vector<std::uint64_t> salt) {
  auto rng = make_rng(seed, salt);
  std::vector<Vec> out;
  for (std::size_t i = 0; i < count; ++i) {
    Vec v(dim);
    for (int k = 0; k < dim; ++k) v(k) = uniform(rng, -1.0, 1.0);
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace lieharm
