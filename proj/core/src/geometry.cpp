#include "lieharm/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "lieharm/error.hpp"

namespace lieharm {
namespace {

std::complex<double> checked(std::complex<double> v) {
  if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
    throw Error(ErrorCode::EvaluationFailure, "function returned a non-finite value");
  return v;
}

GroupPoint scaled(const GroupPoint& v, double t) { return {t * v.X, t * v.H}; }

std::complex<double> eval_along(const NAGroup& group, const ScalarFunction& f, const GroupPoint& p,
                                const GroupPoint& tangent, double t) {
  const GroupPoint step = scaled(tangent, t);
  return checked(f(group.multiply(p, group.exp(step.X, step.H))));
}

void check_step(double h) {
  if (!(h >= 1e-6)) throw Error(ErrorCode::StepTooSmall, "finite-difference step " + std::to_string(h) + " < 1e-6");
}

}  // namespace

LeftInvariantGeometry::LeftInvariantGeometry(const LieAlgebra& g, const NAGroup& group, Mat frame, double tol)
    : frame_(std::move(frame)) {
  const int m = dim();
  qr_.compute(frame_);
  if (qr_.rank() != m) throw Error(ErrorCode::DimensionMismatch, "frame vectors are dependent");

  for (int i = 0; i < m; ++i) {
    auto [t, outside] = group.split(frame_.col(i));
    if (outside > tol) throw Error(ErrorCode::NotClosedUnderBracket, "frame vector outside n + a");
    tangents_.push_back(std::move(t));
  }

  ad_.assign(static_cast<std::size_t>(m), Mat::Zero(m, m));
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      const Vec b = g.bracket(frame_.col(i), frame_.col(j));
      const Vec c = qr_.solve(b);
      closure_residual_ = std::max(closure_residual_, (frame_ * c - b).cwiseAbs().maxCoeff());
      ad_[static_cast<std::size_t>(i)].col(j) = c;
    }
  }
  if (closure_residual_ > tol)
    throw Error(ErrorCode::NotClosedUnderBracket,
                "frame does not span a subalgebra (residual " + std::to_string(closure_residual_) + ")");

  nabla_.assign(static_cast<std::size_t>(m), Mat::Zero(m, m));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      for (int k = 0; k < m; ++k)
        nabla_[static_cast<std::size_t>(i)](k, j) =
            0.5 * (structure_constant(i, j, k) - structure_constant(j, k, i) + structure_constant(k, i, j));
}

Vec LeftInvariantGeometry::to_frame(const Vec& v) const { return qr_.solve(v); }

Vec LeftInvariantGeometry::bracket(const Vec& x, const Vec& y) const {
  Vec out = Vec::Zero(dim());
  for (int i = 0; i < dim(); ++i)
    if (x(i) != 0.0) out += x(i) * (ad_[static_cast<std::size_t>(i)] * y);
  return out;
}

Mat LeftInvariantGeometry::nabla_operator(const Vec& x) const {
  Mat out = Mat::Zero(dim(), dim());
  for (int i = 0; i < dim(); ++i)
    if (x(i) != 0.0) out += x(i) * nabla_[static_cast<std::size_t>(i)];
  return out;
}

Vec LeftInvariantGeometry::nabla(const Vec& x, const Vec& y) const { return nabla_operator(x) * y; }

Vec LeftInvariantGeometry::curvature(const Vec& x, const Vec& y, const Vec& z) const {
  const Mat nx = nabla_operator(x), ny = nabla_operator(y);
  return nx * (ny * z) - ny * (nx * z) - nabla_operator(bracket(x, y)) * z;
}

double LeftInvariantGeometry::sectional_curvature(const Vec& x, const Vec& y) const {
  const double denom = x.squaredNorm() * y.squaredNorm() - std::pow(x.dot(y), 2);
  if (denom <= 1e-12 * x.squaredNorm() * y.squaredNorm() || denom <= 0.0)
    throw Error(ErrorCode::DegeneratePlane, "sectional curvature of a degenerate plane");
  return curvature(x, y, y).dot(x) / denom;
}

Vec LeftInvariantGeometry::mean_curvature() const {
  Vec out = Vec::Zero(dim());
  for (int k = 0; k < dim(); ++k) out += nabla_[static_cast<std::size_t>(k)].col(k);
  return out;
}

double LeftInvariantGeometry::metric_compatibility_residual() const {
  double r = 0.0;
  for (int i = 0; i < dim(); ++i)
    for (int j = 0; j < dim(); ++j)
      for (int k = 0; k < dim(); ++k) r = std::max(r, std::abs(christoffel(i, j, k) + christoffel(i, k, j)));
  return r;
}

double LeftInvariantGeometry::torsion_residual() const {
  double r = 0.0;
  for (int i = 0; i < dim(); ++i)
    for (int j = 0; j < dim(); ++j)
      for (int k = 0; k < dim(); ++k)
        r = std::max(r, std::abs(christoffel(i, j, k) - christoffel(j, i, k) - structure_constant(i, j, k)));
  return r;
}

double LeftInvariantGeometry::curvature_symmetry_residual() const {
  const int m = dim();
  double r = 0.0;
  for (int a = 0; a < m; ++a) {
    for (int b = 0; b < m; ++b) {
      const Vec ea = Vec::Unit(m, a), eb = Vec::Unit(m, b);
      for (int c = 0; c < m; ++c) {
        const Vec ec = Vec::Unit(m, c);
        const Vec rabc = curvature(ea, eb, ec);
        r = std::max(r, (rabc + curvature(eb, ea, ec)).cwiseAbs().maxCoeff());
        for (int d = 0; d < m; ++d) {
          const Vec ed = Vec::Unit(m, d);
          r = std::max(r, std::abs(rabc.dot(ed) - curvature(ec, ed, ea).dot(eb)));
        }
      }
    }
  }
  return r;
}

TensionFieldReport tension_field(const SubmersionProjection& pi, const LeftInvariantGeometry& source,
                                 const LeftInvariantGeometry& target) {
  const Eigen::Index nk = pi.kernel_basis.cols();
  const Eigen::Index nt = target.dim();
  Mat kernel(source.dim(), nk);
  for (Eigen::Index i = 0; i < nk; ++i) kernel.col(i) = source.to_frame(pi.kernel_basis.col(i));
  kernel = orthonormalize(kernel, Mat::Identity(source.dim(), source.dim()));

  TensionFieldReport rep;
  rep.tau = Vec::Zero(nt);
  rep.per_direction_traces = Vec::Zero(nt);
  rep.connection_route = Vec::Zero(nt);
  for (Eigen::Index j = 0; j < nt; ++j) {
    Vec x = source.to_frame(target.frame().col(j));
    x /= x.norm();
    double trace = 0.0, conn = 0.0;
    for (Eigen::Index i = 0; i < kernel.cols(); ++i) {
      const Vec e = kernel.col(i);
      trace += e.dot(source.bracket(x, e));
      conn += source.nabla(e, e).dot(x);
    }
    rep.per_direction_traces(j) = trace;
    rep.connection_route(j) = conn;
    rep.tau(j) = -conn;
  }
  return rep;
}

double fiber_second_fundamental(const LeftInvariantGeometry& geometry, const Vec& x, const RankOneData& rankone) {
  const Vec xf = geometry.to_frame(x);
  const Vec hf = geometry.to_frame(rankone.h_beta);
  return geometry.nabla(xf, xf).dot(hf);
}

std::complex<double> directional_derivative(const NAGroup& group, const ScalarFunction& f, const GroupPoint& p,
                                            const GroupPoint& tangent, double h, bool richardson) {
  check_step(h);
  auto central = [&](double s) {
    return (eval_along(group, f, p, tangent, s) - eval_along(group, f, p, tangent, -s)) / (2.0 * s);
  };
  const auto d_h = central(h);
  if (!richardson) return d_h;
  return (4.0 * central(0.5 * h) - d_h) / 3.0;
}

std::complex<double> second_derivative(const NAGroup& group, const ScalarFunction& f, const GroupPoint& p,
                                       const GroupPoint& tangent, double h, bool richardson) {
  check_step(h);
  const auto f0 = checked(f(p));
  auto stencil = [&](double s) {
    return (eval_along(group, f, p, tangent, s) - 2.0 * f0 + eval_along(group, f, p, tangent, -s)) / (s * s);
  };
  const auto d_h = stencil(h);
  if (!richardson) return d_h;
  return (4.0 * stencil(0.5 * h) - d_h) / 3.0;
}

std::complex<double> laplacian(const LeftInvariantGeometry& geometry, const NAGroup& group, const ScalarFunction& f,
                               const GroupPoint& p, double h, bool richardson) {
  check_step(h);
  std::complex<double> sum = 0.0;
  for (const auto& t : geometry.frame_tangents()) sum += second_derivative(group, f, p, t, h, richardson);

  // first-order term: derivative along sum_k nabla_{e_k} e_k, split into its n and a parts
  auto [v, outside] = group.split(geometry.to_algebra(geometry.mean_curvature()));
  (void)outside;
  const GroupPoint vn{v.X, Vec::Zero(group.rank())};
  const GroupPoint va{Vec::Zero(group.dim_n()), v.H};
  if (v.X.cwiseAbs().maxCoeff() > 1e-14) sum -= directional_derivative(group, f, p, vn, h, richardson);
  if (v.H.size() && v.H.cwiseAbs().maxCoeff() > 1e-14) sum -= directional_derivative(group, f, p, va, h, richardson);
  return sum;
}

std::complex<double> iterated_laplacian(const LeftInvariantGeometry& geometry, const NAGroup& group,
                                        const ScalarFunction& f, const GroupPoint& p, int k, double h,
                                        double h_outer) {
  if (k <= 0) return checked(f(p));
  if (k == 1) return laplacian(geometry, group, f, p, h);
  const ScalarFunction inner = [&](const GroupPoint& q) {
    return iterated_laplacian(geometry, group, f, q, k - 1, h, h_outer);
  };
  return laplacian(geometry, group, inner, p, h_outer);
}

std::complex<double> gradient_square(const LeftInvariantGeometry& geometry, const NAGroup& group,
                                     const ScalarFunction& f, const GroupPoint& p, double h) {
  std::complex<double> sum = 0.0;
  for (const auto& t : geometry.frame_tangents()) {
    const auto d = directional_derivative(group, f, p, t, h);
    sum += d * d;
  }
  return sum;
}

RadialOperator radial_operator(const RestrictedRootSystem& system, std::size_t beta) {
  return {system.ip(beta, beta), system.two_rho_pairing(beta)};
}

RadialOperator radial_operator_target(const RankOneData& r) {
  return {r.beta_norm2, (r.m_beta + 2 * r.m_2beta) * r.beta_norm2};
}

double radial_laplacian(const RadialOperator& op, const RadialFunction& u, double t) {
  return op.apply(u.d1(t), u.d2(t));
}

Polynomial::Polynomial(std::vector<double> coeffs) : c_(std::move(coeffs)) {
  while (!c_.empty() && c_.back() == 0.0) c_.pop_back();
}

Polynomial Polynomial::monomial(int degree, double c) {
  std::vector<double> v(static_cast<std::size_t>(degree) + 1, 0.0);
  v.back() = c;
  return Polynomial(std::move(v));
}

double Polynomial::operator()(double t) const {
  double acc = 0.0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

Polynomial Polynomial::derivative() const {
  if (c_.size() <= 1) return Polynomial();
  std::vector<double> d(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = static_cast<double>(i) * c_[i];
  return Polynomial(std::move(d));
}

Polynomial apply(const RadialOperator& op, const Polynomial& u) {
  const Polynomial d1 = u.derivative();
  const Polynomial d2 = d1.derivative();
  std::vector<double> out(d1.coeffs().size(), 0.0);
  for (std::size_t i = 0; i < d1.coeffs().size(); ++i) out[i] -= op.first * d1.coeffs()[i];
  for (std::size_t i = 0; i < d2.coeffs().size(); ++i) out[i] += op.second * d2.coeffs()[i];
  return Polynomial(std::move(out));
}

}  // namespace lieharm
