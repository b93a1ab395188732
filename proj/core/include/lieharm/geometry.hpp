#pragma once

#include <complex>
#include <functional>
#include <vector>

#include "lieharm/algebra.hpp"
#include "lieharm/rankone.hpp"

namespace lieharm {

/// Left-invariant metric on a subgroup of NA for which the given frame (a
/// basis of a subalgebra of n + a) is orthonormal.
///
/// Structure constants c_ij^k ([e_i, e_j] = sum_k c_ij^k e_k) and the
/// Levi-Civita connection Gamma_ij^k = <nabla_{e_i} e_j, e_k> are computed
/// once, from the Koszul formula
///   2<nabla_X Y, Z> = <[X,Y],Z> - <[Y,Z],X> + <[Z,X],Y>.
/// Vectors passed to the frame-level methods are frame coordinates.
class LeftInvariantGeometry {
 public:
  /// Throws NotClosedUnderBracket if the frame does not span a subalgebra.
  LeftInvariantGeometry(const LieAlgebra& g, const NAGroup& group, Mat frame, double tol = 1e-10);

  int dim() const { return static_cast<int>(frame_.cols()); }
  const Mat& frame() const { return frame_; }
  /// n- and a-coordinates (in the NAGroup bases) of each frame vector.
  const std::vector<GroupPoint>& frame_tangents() const { return tangents_; }

  double structure_constant(int i, int j, int k) const { return ad_[static_cast<std::size_t>(i)](k, j); }
  double christoffel(int i, int j, int k) const { return nabla_[static_cast<std::size_t>(i)](k, j); }

  Vec to_frame(const Vec& algebra_vector) const;
  Vec to_algebra(const Vec& frame_coords) const { return frame_ * frame_coords; }

  Vec bracket(const Vec& x, const Vec& y) const;
  Vec nabla(const Vec& x, const Vec& y) const;
  Mat nabla_operator(const Vec& x) const;
  /// R(X,Y)Z = nabla_X nabla_Y Z - nabla_Y nabla_X Z - nabla_[X,Y] Z.
  Vec curvature(const Vec& x, const Vec& y, const Vec& z) const;
  /// Throws DegeneratePlane for (nearly) dependent x, y.
  double sectional_curvature(const Vec& x, const Vec& y) const;
  /// sum_k nabla_{e_k} e_k.
  Vec mean_curvature() const;

  double closure_residual() const { return closure_residual_; }
  /// max |Gamma_ij^k + Gamma_ik^j|.
  double metric_compatibility_residual() const;
  /// max |Gamma_ij^k - Gamma_ji^k - c_ij^k|.
  double torsion_residual() const;
  /// max over frame quadruples of |R(X,Y)+R(Y,X)| and |<R(X,Y)Z,W> - <R(Z,W)X,Y>|.
  double curvature_symmetry_residual() const;

 private:
  Mat frame_;
  std::vector<GroupPoint> tangents_;
  Eigen::ColPivHouseholderQR<Mat> qr_;
  std::vector<Mat> ad_;     // ad_[i](k, j) = c_ij^k
  std::vector<Mat> nabla_;  // nabla_[i](k, j) = Gamma_ij^k
  double closure_residual_ = 0.0;
};

struct TensionFieldReport {
  Vec tau;                   // <tau_pi, X> for each target frame vector X
  Vec per_direction_traces;  // trace over ker pi of ad X (ad-trace route)
  Vec connection_route;      // sum_i <nabla_{e_i} e_i, X> over a kernel frame (Koszul route)
  bool vanishes(double tol = 1e-10) const {
    return per_direction_traces.size() == 0 ||
           (per_direction_traces.cwiseAbs().maxCoeff() < tol && connection_route.cwiseAbs().maxCoeff() < tol);
  }
};

TensionFieldReport tension_field(const SubmersionProjection& pi, const LeftInvariantGeometry& source,
                                 const LeftInvariantGeometry& target);

/// <nabla_X X, H_beta> for X (algebra coordinates) in a root space of ker pi.
double fiber_second_fundamental(const LeftInvariantGeometry& geometry, const Vec& x, const RankOneData& rankone);

using ScalarFunction = std::function<std::complex<double>(const GroupPoint&)>;

/// d/dt f(p exp(t v)) at t = 0 by central differences (Richardson on h, h/2).
std::complex<double> directional_derivative(const NAGroup& group, const ScalarFunction& f, const GroupPoint& p,
                                            const GroupPoint& tangent, double h = 1e-3, bool richardson = true);
/// d^2/dt^2 f(p exp(t v)) at t = 0, three-point stencil (Richardson on h, h/2).
std::complex<double> second_derivative(const NAGroup& group, const ScalarFunction& f, const GroupPoint& p,
                                       const GroupPoint& tangent, double h = 1e-3, bool richardson = true);

/// Laplace-Beltrami operator sum_k [e_k(e_k f) - (nabla_{e_k} e_k) f] at p.
/// Throws StepTooSmall for h < 1e-6 and EvaluationFailure if f is not finite.
std::complex<double> laplacian(const LeftInvariantGeometry& geometry, const NAGroup& group, const ScalarFunction& f,
                               const GroupPoint& p, double h = 1e-3, bool richardson = true);

/// Delta^k f at p; the outer applications use step `h_outer`.
std::complex<double> iterated_laplacian(const LeftInvariantGeometry& geometry, const NAGroup& group,
                                        const ScalarFunction& f, const GroupPoint& p, int k, double h = 1e-3,
                                        double h_outer = 2e-2);

/// sum_k (e_k f)^2 with the complex-bilinear square.
std::complex<double> gradient_square(const LeftInvariantGeometry& geometry, const NAGroup& group,
                                     const ScalarFunction& f, const GroupPoint& p, double h = 1e-3);

/// Laplacian of an A-radial function F = u(beta(H)):
///   Delta F = second * u'' - first * u'.
struct RadialOperator {
  double second = 0.0;  // <beta, beta>
  double first = 0.0;   // sum_{alpha > 0} m_alpha <alpha, beta>
  double apply(double du, double d2u) const { return second * d2u - first * du; }
};

/// On NA, first = sum over all positive roots.
RadialOperator radial_operator(const RestrictedRootSystem& system, std::size_t beta);
/// On N^beta A^beta, first = (m_beta + 2 m_{2 beta}) <beta, beta>.
RadialOperator radial_operator_target(const RankOneData& rankone);

struct RadialFunction {
  std::function<double(double)> value, d1, d2;
};

double radial_laplacian(const RadialOperator& op, const RadialFunction& u, double t);

/// Real polynomial, coefficients in increasing degree, trailing exact zeros trimmed.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<double> coeffs);
  static Polynomial monomial(int degree, double c = 1.0);

  const std::vector<double>& coeffs() const { return c_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  double operator()(double t) const;
  Polynomial derivative() const;

 private:
  std::vector<double> c_;
};

/// Exact action of the radial operator on polynomial coefficients.
Polynomial apply(const RadialOperator& op, const Polynomial& u);

}  // namespace lieharm
