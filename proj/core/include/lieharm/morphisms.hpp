#pragma once

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "lieharm/geometry.hpp"

namespace lieharm {

enum class PhiVariant { MultOne, Isotropic };
std::string to_string(PhiVariant v);

/// Complex-valued harmonic morphism on N^beta A^beta, X in g_beta.
/// MultOne (m_beta = 1): phi(n exp H) = <X, log n> + i exp(beta(H)), X real
///   with <X, X> = <beta, beta>.
/// Isotropic (m_beta >= 2): phi(n exp H) = <X, log n> with
///   X = (u + i v)/sqrt(2), u, v orthogonal of norm^2 <beta, beta>, so <X, X> = 0.
struct HarmonicMorphismPhi {
  PhiVariant variant = PhiVariant::MultOne;
  std::size_t beta = 0;
  Vec x_re, x_im;      // algebra coordinates
  Vec coef_re, coef_im;  // coefficients on the NAGroup n coordinates
  Vec beta_a;          // beta on the a coordinates
  double beta_norm2 = 0.0;
  double normalization_residual = 0.0;  // | <X,X> - target | for the chosen variant

  std::complex<double> operator()(const GroupPoint& p) const;
};

/// Default variant: MultOne for m_beta = 1, Isotropic otherwise.
/// Throws MultiplicityMismatch (MultOne requested with m_beta != 1) or
/// NoIsotropicVector (Isotropic requested with m_beta < 2).
HarmonicMorphismPhi build_phi(const NAGroup& group, const RankOneData& rankone,
                              std::optional<PhiVariant> variant = std::nullopt);

/// f o pi.
ScalarFunction pullback(const SubmersionProjection& pi, ScalarFunction f);

struct MorphismReport {
  double max_laplacian = 0.0;    // max |Delta f|
  double max_conformality = 0.0; // max |sum_k (e_k f)^2|
  double nonconstancy = 0.0;     // max |f(p) - f(p_0)|
  std::size_t points = 0;
};

MorphismReport check_harmonic_morphism(const ScalarFunction& f, const LeftInvariantGeometry& geometry,
                                       const NAGroup& group, const std::vector<GroupPoint>& points,
                                       double h = 1e-3);

/// max over points of |Delta^M (f o pi)(p) - (Delta^{M^beta} f)(pi p)|.
double check_intertwining(const SubmersionProjection& pi, const LeftInvariantGeometry& source,
                          const LeftInvariantGeometry& target, const NAGroup& group, const ScalarFunction& f,
                          const std::vector<GroupPoint>& points, double h = 1e-3);

/// Radial eigenfunction f_s = exp(s beta(H)) on the target, pulled back.
struct EigenReport {
  double s = 0.0;
  double lambda = 0.0;  // Delta f_s = lambda f_s
  double mu = 0.0;      // Delta f_s^2 = mu f_s^2
  double max_eigen_residual = 0.0;   // relative, f_s o pi
  double max_square_residual = 0.0;  // relative, f_s^2 o pi
  std::size_t points = 0;
};

/// Throws DegenerateS when s = 0.
EigenReport check_eigenfunction_pullback(const RankOneData& rankone, const SubmersionProjection& pi,
                                         const LeftInvariantGeometry& source, const NAGroup& group, double s,
                                         const std::vector<GroupPoint>& points, double h = 1e-3);

/// Proper r-harmonic radial function on the target, pulled back to NA.
///  r >= 2: u(t) = t^{r-1}. r = 1: u(t) = exp(s t) with s = m_beta + 2 m_{2 beta},
///  since t itself is not harmonic.
struct RHarmonicReport {
  int r = 0;
  std::string witness;
  bool exact_vanishes = false;     // Delta^r u == 0 exactly (both operators)
  bool exact_nonzero = false;      // Delta^{r-1} u != 0
  double operator_mismatch = 0.0;  // |first_M - first_target| + |second_M - second_target|
  bool numeric_checked = false;
  std::vector<double> numeric_residuals;  // k = 1..min(r, 2): relative |Delta^k F - exact|

  bool holds(double tol) const;
};

/// Throws OrderOutOfRange for r < 1, or for r > 4 when numeric checking is requested.
RHarmonicReport check_r_harmonic_pullback(const RestrictedRootSystem& system, const RankOneData& rankone,
                                          const SubmersionProjection& pi, const LeftInvariantGeometry& source,
                                          const NAGroup& group, int r, const std::vector<GroupPoint>& points,
                                          bool numeric, double h = 1e-3);

}  // namespace lieharm
