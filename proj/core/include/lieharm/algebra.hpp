#pragma once

#include <string>
#include <vector>

#include "lieharm/linalg.hpp"

namespace lieharm {

/// Residuals of the defining identities, recorded once at construction.
struct StructureResiduals {
  double closure = 0.0;             // max |[B_i,B_j] - sum_k c_ij^k B_k|
  double jacobi = 0.0;              // max cyclic sum over basis triples
  double theta_closure = 0.0;       // -B_i^T expressed in the basis
  double theta_involution = 0.0;    // |theta^2 - I|
  double theta_automorphism = 0.0;  // max |theta[X,Y] - [theta X, theta Y]|
  double form_symmetry = 0.0;
  double form_invariance = 0.0;     // max |B([Z,X],Y) + B(X,[Z,Y])|
  double gram_symmetry = 0.0;
};

/// A real matrix Lie algebra: a basis of d x d matrices closed under the
/// commutator, the Cartan involution X -> -X^T, the invariant form
/// B = form_scale * Killing form, and the inner product <X,Y> = -B(X, theta Y).
///
/// Vectors are coordinate columns in the realization basis.
class LieAlgebra {
 public:
  LieAlgebra(std::string id, std::vector<Mat> basis, std::vector<Mat> cartan_hint,
             double form_scale = 1.0);

  const std::string& id() const { return id_; }
  int dim() const { return static_cast<int>(basis_.size()); }
  int matrix_size() const { return static_cast<int>(basis_.front().rows()); }
  const std::vector<Mat>& basis() const { return basis_; }
  double form_scale() const { return form_scale_; }

  Mat matrix_of(const Vec& x) const;
  /// Coordinates of a matrix in the basis (least squares); `residual` receives
  /// the Frobenius distance from the span.
  Vec coords_of(const Mat& m, double* residual = nullptr) const;

  Vec bracket(const Vec& x, const Vec& y) const;
  Mat ad(const Vec& x) const;
  const Mat& ad_basis(int i) const { return ad_[static_cast<std::size_t>(i)]; }

  Vec theta(const Vec& x) const;
  const Mat& theta_matrix() const { return theta_; }

  double form(const Vec& x, const Vec& y) const;
  const Mat& form_matrix() const { return form_; }

  double inner(const Vec& x, const Vec& y) const;
  double norm(const Vec& x) const;
  const Mat& gram() const { return gram_; }

  const std::vector<Vec>& cartan_hint() const { return hint_; }
  const StructureResiduals& residuals() const { return residuals_; }

 private:
  void check_dim(const Vec& x) const;

  std::string id_;
  std::vector<Mat> basis_;
  double form_scale_;
  Mat flat_;
  Eigen::ColPivHouseholderQR<Mat> qr_;
  std::vector<Mat> ad_;
  Mat theta_;
  Mat form_;
  Mat gram_;
  std::vector<Vec> hint_;
  StructureResiduals residuals_;
};

struct CartanDecomposition {
  Mat k_basis;  // G-orthonormal basis of the +1 eigenspace of theta
  Mat p_basis;  // G-orthonormal basis of the -1 eigenspace
  double kk_residual = 0.0;  // component of [k,k] in p
  double kp_residual = 0.0;  // component of [k,p] in k
  double pp_residual = 0.0;  // component of [p,p] in p

  int dim_k() const { return static_cast<int>(k_basis.cols()); }
  int dim_p() const { return static_cast<int>(p_basis.cols()); }
  /// k basis followed by p basis: a G-orthonormal basis of the whole algebra.
  Mat full_basis() const;
};

/// Splits the algebra into theta eigenspaces. Throws ThetaNotInvolutive when
/// theta^2 differs from the identity by more than `tol`.
CartanDecomposition cartan_decompose(const LieAlgebra& g, double tol = 1e-10);

/// Projections onto k and p along the Cartan decomposition.
Vec k_part(const LieAlgebra& g, const Vec& x);
Vec p_part(const LieAlgebra& g, const Vec& x);

/// max over basis vectors of the failure of ad X to be self-adjoint (X in p)
/// or skew-adjoint (X in k) with respect to the inner product.
double ad_adjointness_residual(const LieAlgebra& g, const CartanDecomposition& cartan);

}  // namespace lieharm
