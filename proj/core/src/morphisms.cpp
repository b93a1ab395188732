#include "lieharm/morphisms.hpp"

#include <algorithm>
#include <cmath>

#include "lieharm/error.hpp"

namespace lieharm {
namespace {

// Delta^2 by finite differences: the outer stencil divides the inner
// round-off by h_outer^2, so both levels use wider steps than Delta alone
constexpr double kNestedInner = 1e-2;
constexpr double kNestedOuter = 5e-2;

}  // namespace

std::string to_string(PhiVariant v) { return v == PhiVariant::MultOne ? "mult_one" : "isotropic"; }

std::complex<double> HarmonicMorphismPhi::operator()(const GroupPoint& p) const {
  if (variant == PhiVariant::Isotropic) return {coef_re.dot(p.X), coef_im.dot(p.X)};
  return {coef_re.dot(p.X), std::exp(beta_a.dot(p.H))};
}

HarmonicMorphismPhi build_phi(const NAGroup& group, const RankOneData& r, std::optional<PhiVariant> variant) {
  const PhiVariant v = variant.value_or(r.m_beta == 1 ? PhiVariant::MultOne : PhiVariant::Isotropic);
  if (v == PhiVariant::MultOne && r.m_beta != 1)
    throw Error(ErrorCode::MultiplicityMismatch,
                "mult_one variant needs m_beta = 1, got " + std::to_string(r.m_beta));
  if (v == PhiVariant::Isotropic && r.m_beta < 2)
    throw Error(ErrorCode::NoIsotropicVector, "g_beta has dimension 1, no isotropic vector");

  HarmonicMorphismPhi phi;
  phi.variant = v;
  phi.beta = r.beta;
  phi.beta_norm2 = r.beta_norm2;
  const double scale = std::sqrt(r.beta_norm2);
  // n_beta_basis is orthonormal with g_beta first
  const Vec u = scale * r.n_beta_basis.col(0);
  if (v == PhiVariant::MultOne) {
    phi.x_re = u;
    phi.x_im = Vec::Zero(u.size());
  } else {
    phi.x_re = u / std::sqrt(2.0);
    phi.x_im = scale * r.n_beta_basis.col(1) / std::sqrt(2.0);
  }
  const auto [re, out_re] = group.split(phi.x_re);
  const auto [im, out_im] = group.split(phi.x_im);
  phi.coef_re = re.X;
  phi.coef_im = im.X;
  // beta(H_i) = <h_beta, H_i> on the orthonormal a basis
  phi.beta_a = group.split(r.h_beta).first.H;
  const double xx_re = re.X.squaredNorm() - im.X.squaredNorm();
  const double xx_im = 2.0 * re.X.dot(im.X);
  if (v == PhiVariant::MultOne)
    phi.normalization_residual = std::abs(xx_re - r.beta_norm2) + std::abs(xx_im) + out_re + out_im;
  else
    phi.normalization_residual = std::abs(xx_re) + std::abs(xx_im) +
                                 std::abs(re.X.squaredNorm() + im.X.squaredNorm() - r.beta_norm2) + out_re +
                                 out_im;
  return phi;
}

ScalarFunction pullback(const SubmersionProjection& pi, ScalarFunction f) {
  return [&pi, f = std::move(f)](const GroupPoint& p) { return f(project_point(pi, p)); };
}

MorphismReport check_harmonic_morphism(const ScalarFunction& f, const LeftInvariantGeometry& geometry,
                                       const NAGroup& group, const std::vector<GroupPoint>& points, double h) {
  MorphismReport rep;
  rep.points = points.size();
  if (points.empty()) return rep;
  const auto f0 = f(points.front());
  for (const auto& p : points) {
    rep.max_laplacian = std::max(rep.max_laplacian, std::abs(laplacian(geometry, group, f, p, h)));
    rep.max_conformality = std::max(rep.max_conformality, std::abs(gradient_square(geometry, group, f, p, h)));
    rep.nonconstancy = std::max(rep.nonconstancy, std::abs(f(p) - f0));
  }
  return rep;
}

double check_intertwining(const SubmersionProjection& pi, const LeftInvariantGeometry& source,
                          const LeftInvariantGeometry& target, const NAGroup& group, const ScalarFunction& f,
                          const std::vector<GroupPoint>& points, double h) {
  const ScalarFunction pulled = pullback(pi, f);
  double worst = 0.0;
  for (const auto& p : points) {
    const auto up = laplacian(source, group, pulled, p, h);
    const auto down = laplacian(target, group, f, project_point(pi, p), h);
    worst = std::max(worst, std::abs(up - down));
  }
  return worst;
}

EigenReport check_eigenfunction_pullback(const RankOneData& r, const SubmersionProjection& pi,
                                         const LeftInvariantGeometry& source, const NAGroup& group, double s,
                                         const std::vector<GroupPoint>& points, double h) {
  if (s == 0.0) throw Error(ErrorCode::DegenerateS, "s = 0 gives a constant function");
  const auto [hb, out] = group.split(r.h_beta);
  (void)out;
  const Vec beta_a = hb.H;
  const RadialOperator op = radial_operator_target(r);

  EigenReport rep;
  rep.s = s;
  rep.lambda = op.second * s * s - op.first * s;
  rep.mu = op.second * 4.0 * s * s - op.first * 2.0 * s;
  rep.points = points.size();
  const ScalarFunction fs = [beta_a, s](const GroupPoint& q) { return std::complex<double>(std::exp(s * beta_a.dot(q.H))); };
  const ScalarFunction fs2 = [beta_a, s](const GroupPoint& q) {
    return std::complex<double>(std::exp(2.0 * s * beta_a.dot(q.H)));
  };
  const ScalarFunction up = pullback(pi, fs), up2 = pullback(pi, fs2);
  for (const auto& p : points) {
    const auto v = up(p), v2 = up2(p);
    const auto d = laplacian(source, group, up, p, h);
    const auto d2 = laplacian(source, group, up2, p, h);
    rep.max_eigen_residual =
        std::max(rep.max_eigen_residual, std::abs(d - rep.lambda * v) / std::max(1.0, std::abs(v)));
    rep.max_square_residual =
        std::max(rep.max_square_residual, std::abs(d2 - rep.mu * v2) / std::max(1.0, std::abs(rep.mu * v2)));
  }
  return rep;
}

bool RHarmonicReport::holds(double tol) const {
  if (!exact_vanishes || !exact_nonzero || operator_mismatch > 1e-10) return false;
  return std::all_of(numeric_residuals.begin(), numeric_residuals.end(), [tol](double x) { return x < tol; });
}

RHarmonicReport check_r_harmonic_pullback(const RestrictedRootSystem& system, const RankOneData& r,
                                          const SubmersionProjection& pi, const LeftInvariantGeometry& source,
                                          const NAGroup& group, int order, const std::vector<GroupPoint>& points,
                                          bool numeric, double h) {
  if (order < 1) throw Error(ErrorCode::OrderOutOfRange, "r must be at least 1");
  if (numeric && order > 4)
    throw Error(ErrorCode::OrderOutOfRange, "numerical r-harmonic check supports r <= 4");

  const RadialOperator up_op = radial_operator(system, r.beta);
  const RadialOperator down_op = radial_operator_target(r);
  RHarmonicReport rep;
  rep.r = order;
  rep.operator_mismatch = std::abs(up_op.first - down_op.first) + std::abs(up_op.second - down_op.second);

  const auto [hb, out] = group.split(r.h_beta);
  (void)out;
  const Vec beta_a = hb.H;
  const double s = r.m_beta + 2 * r.m_2beta;

  // exact value of Delta^k u at t, on the target side
  std::function<double(int, double)> exact;
  ScalarFunction witness;
  if (order == 1) {
    rep.witness = "exp(" + std::to_string(static_cast<int>(s)) + " t)";
    const double up_eig = up_op.second * s * s - up_op.first * s;
    const double down_eig = down_op.second * s * s - down_op.first * s;
    rep.exact_vanishes = std::abs(up_eig) < 1e-12 && std::abs(down_eig) < 1e-12;
    rep.exact_nonzero = true;
    exact = [down_eig, s](int k, double t) { return std::pow(down_eig, k) * std::exp(s * t); };
    witness = [beta_a, s](const GroupPoint& q) { return std::complex<double>(std::exp(s * beta_a.dot(q.H))); };
  } else {
    rep.witness = "t^" + std::to_string(order - 1);
    std::vector<Polynomial> up_chain{Polynomial::monomial(order - 1)}, down_chain{Polynomial::monomial(order - 1)};
    for (int k = 0; k < order; ++k) {
      up_chain.push_back(apply(up_op, up_chain.back()));
      down_chain.push_back(apply(down_op, down_chain.back()));
    }
    rep.exact_vanishes = up_chain.back().is_zero() && down_chain.back().is_zero();
    const Polynomial& last = down_chain[static_cast<std::size_t>(order - 1)];
    rep.exact_nonzero = last.degree() == 0 && std::abs(last.coeffs()[0]) > 1e-12;
    exact = [down_chain](int k, double t) { return down_chain[static_cast<std::size_t>(k)](t); };
    const int deg = order - 1;
    witness = [beta_a, deg](const GroupPoint& q) { return std::complex<double>(std::pow(beta_a.dot(q.H), deg)); };
  }

  if (numeric) {
    rep.numeric_checked = true;
    const ScalarFunction pulled = pullback(pi, witness);
    for (int k = 1; k <= std::min(order, 2); ++k) {
      double worst = 0.0;
      for (const auto& p : points) {
        const double t = beta_a.dot(project_point(pi, p).H);
        const double want = exact(k, t);
        const auto got = k == 1 ? laplacian(source, group, pulled, p, h)
                                : iterated_laplacian(source, group, pulled, p, k, kNestedInner, kNestedOuter);
        worst = std::max(worst, std::abs(got - want) / std::max(1.0, std::abs(want)));
      }
      rep.numeric_residuals.push_back(worst);
    }
  }
  return rep;
}

}  // namespace lieharm
