#pragma once

#include <cmath>
#include <cstddef>
#include <optional>
#include <vector>

#include "lieharm/algebra.hpp"
#include "lieharm/rational.hpp"

namespace lieharm {

struct RootTolerances {
  double identity = 1e-10;
  double cluster = 1e-8;     // eigenvalue clustering of ad(H_reg)
  double positivity = 1e-9;  // genericity band around zero for H_reg
  double snap = 1e-6;
  std::int64_t max_denominator = 48;
};

struct MaximalAbelian {
  Mat basis;          // G-orthonormal basis of a (columns, algebra coordinates)
  Mat lattice_basis;  // the chosen generators before orthonormalization
  int rank = 0;
  double abelian_residual = 0.0;  // max |[H_i, H_j]|
  int centralizer_dim = 0;        // dim of the centralizer of a inside p
};

/// Greedy maximal abelian subspace of p: the realization's Cartan hint is
/// tried first, then the p basis, then the centralizer is completed until it
/// equals a.
MaximalAbelian maximal_abelian(const LieAlgebra& g, const CartanDecomposition& cartan,
                               double tol = 1e-10);

/// G-orthonormal basis of {Y in p : [Y, H] = 0 for all H in span(a_basis)}.
Mat centralizer_in_p(const LieAlgebra& g, const CartanDecomposition& cartan, const Mat& a_basis,
                     double tol = 1e-9);

struct RestrictedRoot {
  Vec coords;          // (alpha(H_1), ..., alpha(H_r)) on the orthonormal a basis
  Vec lattice_values;  // alpha on MaximalAbelian::lattice_basis
  std::vector<std::optional<Rational>> snapped;  // lattice values snapped to p/q, q <= 48
  Vec h_alpha;         // dual vector in a, alpha(H) = <h_alpha, H>
  Mat space;           // G-orthonormal basis of g_alpha
  int multiplicity = 0;
  bool positive = false;
  double reg_value = 0.0;          // alpha(H_reg)
  std::vector<int> simple_coeffs;  // expansion in the simple roots (signed)
  int height = 0;
};

/// Restricted roots, root spaces, and the positive / simple choices.
///
/// `roots` lists the positive roots first (sorted by height, then by
/// decreasing H_reg value), followed by their negatives in the same order.
/// `simples` indexes into `roots`; simple root i is the i-th positive root of
/// height one.
struct RestrictedRootSystem {
  MaximalAbelian a;
  int rank = 0;
  Vec h_reg;
  Mat g0;
  std::vector<RestrictedRoot> roots;
  std::size_t num_positive = 0;
  std::vector<std::size_t> simples;
  double cluster_residual = 0.0;  // worst deviation of ad(H_i) from a scalar on a cluster

  std::optional<std::size_t> find(const Vec& coords, double tol = 1e-7) const;
  int multiplicity_of(const Vec& coords) const;
  double ip(std::size_t i, std::size_t j) const;
  /// Index of 2*root(i), if it is a root.
  std::optional<std::size_t> doubled(std::size_t i) const;
  /// Positive root indices excluding beta and 2*beta.
  std::vector<std::size_t> positives_without(std::size_t beta) const;
  /// sum_{alpha > 0} m_alpha <alpha, beta>.
  double two_rho_pairing(std::size_t beta) const;
  /// Orthonormal basis of n = sum of positive root spaces, root by root.
  Mat n_basis() const;
};

/// Simultaneous eigendecomposition of ad(a). Throws NonMaximalA,
/// ClusteringAmbiguity, or DecompositionFailure.
RestrictedRootSystem extract_roots(const LieAlgebra& g, const CartanDecomposition& cartan,
                                   const MaximalAbelian& a, const RootTolerances& tol = {});

/// Indecomposable positive roots (those that are not a sum of two positive
/// roots), ordered by decreasing value on H_reg.
std::vector<std::size_t> simple_roots(const RestrictedRootSystem& system, double tol = 1e-7);

/// Max G-norm of the part of [g_alpha, g_alpha'] outside g_{alpha+alpha'}.
double root_bracket_residual(const LieAlgebra& g, const RestrictedRootSystem& system);

/// Deviation of the union of g_0 and all root space bases from a G-orthonormal
/// basis of the algebra (|Q^T G Q - I|, or infinity when the dimensions do not add up).
double root_decomposition_residual(const LieAlgebra& g, const RestrictedRootSystem& system);

/// sigma_beta(alpha) = alpha - 2<alpha,beta>/<beta,beta> beta, as coordinates.
Vec reflect(const RestrictedRootSystem& system, std::size_t beta, const Vec& alpha);

/// Index of sigma_beta(root alpha) in the system.
std::size_t root_reflection(const RestrictedRootSystem& system, std::size_t beta, std::size_t alpha);

struct Lemma1Report {
  std::size_t beta = 0;
  std::vector<std::size_t> sigma_plus_beta;
  int m_beta = 0;
  int m_2beta = 0;
  double ideal_residual = 0.0;         // [n(beta), n] outside n(beta)
  double weighted_sum = 0.0;           // sum m_alpha <alpha, beta> over Sigma+_beta
  bool araki_parity = true;            // m_beta odd implies m_2beta = 0
  bool reflection_permutes = true;     // sigma_beta permutes Sigma+_beta preserving m
  double sum_invariance_residual = 0;  // |sigma_beta(v) - v|, v = sum m_alpha alpha

  bool holds(double tol = 1e-10) const {
    return ideal_residual < tol && std::abs(weighted_sum) < tol && araki_parity && reflection_permutes &&
           sum_invariance_residual < tol;
  }
};

/// `beta` is a root index that must be simple (InvalidParams otherwise).
Lemma1Report check_lemma1(const LieAlgebra& g, const RestrictedRootSystem& system, std::size_t beta);

}  // namespace lieharm
