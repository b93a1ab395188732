#pragma once

#include <cstdint>
#include <vector>

#include "lieharm/catalog.hpp"
#include "lieharm/geometry.hpp"
#include "lieharm/morphisms.hpp"

namespace lieharm {

/// Everything derived from an algebra spec before a simple root is chosen.
struct AlgebraStructure {
  AlgebraSpec spec;
  LieAlgebra algebra;
  CartanDecomposition cartan;
  MaximalAbelian a;
  RestrictedRootSystem roots;
  NAGroup group;
};

AlgebraStructure analyze_algebra(const AlgebraSpec& spec);

/// Everything attached to one simple root. `simple` indexes the simple roots.
struct BetaContext {
  std::size_t simple = 0;
  RankOneData rankone;
  SubmersionProjection projection;
  LeftInvariantGeometry source;  // NA, frame adapted to ker pi + horizontal
  LeftInvariantGeometry target;  // N^beta A^beta
  RadialOperator source_radial;
  RadialOperator target_radial;
};

/// Throws InvalidParams if `simple` is out of range.
BetaContext build_beta_context(const AlgebraStructure& s, std::size_t simple);

/// Coordinates uniform in [-box, box] per basis direction; the stream is
/// determined by (seed, salt...).
std::vector<GroupPoint> sample_points(const NAGroup& group, std::size_t count, std::uint64_t seed,
                                      std::vector<std::uint64_t> salt = {}, double box = 2.0);

/// Random unit-free vectors in R^dim, uniform in [-1, 1]^dim.
std::vector<Vec> sample_vectors(int dim, std::size_t count, std::uint64_t seed, std::vector<std::uint64_t> salt = {});

}  // namespace lieharm
