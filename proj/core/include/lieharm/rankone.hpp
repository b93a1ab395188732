#pragma once

#include <optional>
#include <string>

#include "lieharm/algebra.hpp"
#include "lieharm/roots.hpp"

namespace lieharm {

enum class HyperbolicType { Real, Complex, Quaternionic, Octonionic, Unknown };

/// "real", "complex", "quaternionic", "octonionic" from m_{2 beta} = 0, 1, 3, 7.
HyperbolicType hyperbolic_type(int m_2beta);
std::string to_string(HyperbolicType t);

/// Data attached to a simple restricted root beta.
struct RankOneData {
  std::size_t beta = 0;                    // root index in the system
  std::optional<std::size_t> two_beta;     // root index of 2 beta, if a root
  Vec beta_coords;
  Vec h_beta;          // beta(H) = <h_beta, H>
  double beta_norm2 = 0.0;  // <beta, beta>
  Mat n_beta_basis;    // g_beta then g_{2 beta}
  Vec a_beta_unit;     // h_beta / |h_beta|
  Mat g_beta_full;     // subalgebra generated by g_{+-beta}
  Mat k_beta_basis;    // (X + theta X)/2 over g^beta
  Mat k_beta_intersection;  // span(g^beta) ∩ k computed directly
  int m_beta = 0;
  int m_2beta = 0;
  int dim_m_beta = 0;  // 1 + m_beta + m_{2 beta}
  int dim_p_beta = 0;  // dim g^beta - dim k^beta, independent count of dim M_beta
  HyperbolicType type = HyperbolicType::Unknown;

  double dual_residual = 0.0;           // max_i |beta(H_i) - <h_beta, H_i>|
  double theta_stability_residual = 0.0;
  double closure_residual = 0.0;        // [g^beta, g^beta] outside g^beta
};

/// Builds the rank-one data for a simple root (root index `beta`).
RankOneData build_rank_one(const LieAlgebra& g, const CartanDecomposition& cartan,
                           const RestrictedRootSystem& system, std::size_t beta);

/// Point of NA in exponential coordinates: exp(X) exp(H), X in n given in the
/// orthonormal root-adapted n basis, H in a given in the orthonormal a basis.
struct GroupPoint {
  Vec X;
  Vec H;
};

/// The group law of NA, evaluated in exponential coordinates.
class NAGroup {
 public:
  NAGroup(const LieAlgebra& g, const RestrictedRootSystem& system);

  int dim_n() const { return static_cast<int>(n_basis_.cols()); }
  int rank() const { return static_cast<int>(a_basis_.cols()); }
  /// Columns in algebra coordinates.
  const Mat& n_basis() const { return n_basis_; }
  const Mat& a_basis() const { return a_basis_; }
  /// Row i: the root (on the orthonormal a basis) whose space holds n basis vector i.
  const Mat& n_roots() const { return n_roots_; }

  GroupPoint identity() const;
  /// Validating constructor: sizes and nilpotency of the X matrix.
  GroupPoint make_point(const Vec& x, const Vec& h) const;
  GroupPoint multiply(const GroupPoint& a, const GroupPoint& b) const;
  GroupPoint inverse(const GroupPoint& a) const;
  /// exp of the algebra element with n-part x and a-part h.
  GroupPoint exp(const Vec& x, const Vec& h) const;

  /// exp(X_mat) exp(H_mat) in the defining realization.
  Mat to_matrix(const GroupPoint& p) const;
  Mat n_matrix(const Vec& x) const;
  Mat a_matrix(const Vec& h) const;

  /// n- and a-coordinates of an algebra vector lying in n + a, with the
  /// G-norm of whatever falls outside.
  std::pair<GroupPoint, double> split(const Vec& algebra_vector) const;

  /// X-coordinate of the logarithm of a unipotent matrix in N.
  Vec log_n(const Mat& unipotent) const;

 private:
  Mat n_basis_, a_basis_, n_roots_;
  Mat gram_;
  std::vector<Mat> n_mats_, a_mats_;
  Mat n_flat_;
  Eigen::ColPivHouseholderQR<Mat> n_qr_;
  int d_ = 0;
};

/// Orthogonal projection pi : n + a -> n^beta + a^beta.
struct SubmersionProjection {
  Mat target_basis;   // g_beta, g_{2 beta}, h_beta/|h_beta| (algebra coordinates)
  Mat kernel_basis;   // n(beta), then ker beta inside a
  Mat source_frame;   // kernel_basis followed by target_basis
  Mat pi_matrix;      // in source_frame coordinates
  Mat pi_n;           // on the n coordinates of GroupPoint
  Mat pi_a;           // on the a coordinates of GroupPoint

  double idempotence_residual = 0.0;
  double self_adjoint_residual = 0.0;
  double ideal_residual = 0.0;         // [ker pi, n + a] outside ker pi
  double homomorphism_residual = 0.0;  // pi[X,Y] - [pi X, pi Y]
  double isometry_residual = 0.0;      // Gram of the horizontal space vs identity, and pi = id there
};

/// Throws IdealCheckFailure when ker pi is not an ideal of n + a.
SubmersionProjection build_projection(const LieAlgebra& g, const RestrictedRootSystem& system,
                                      const RankOneData& rankone, const NAGroup& group,
                                      double tol = 1e-10);

/// pi on group points: (pi_n X, pi_a H).
GroupPoint project_point(const SubmersionProjection& pi, const GroupPoint& p);

}  // namespace lieharm
