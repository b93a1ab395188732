#include "lieharm/algebra.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "lieharm/error.hpp"

namespace lieharm {
namespace {

Vec flatten(const Mat& m) { return Eigen::Map<const Vec>(m.data(), m.size()); }

}  // namespace

LieAlgebra::LieAlgebra(std::string id, std::vector<Mat> basis, std::vector<Mat> cartan_hint,
                       double form_scale)
    : id_(std::move(id)), basis_(std::move(basis)), form_scale_(form_scale) {
  if (basis_.empty()) throw Error(ErrorCode::InvalidParams, "empty basis for " + id_);
  if (!(form_scale_ > 0.0)) throw Error(ErrorCode::InvalidParams, "form_scale must be positive");
  const Eigen::Index d = basis_.front().rows();
  for (const auto& b : basis_) {
    if (b.rows() != d || b.cols() != d)
      throw Error(ErrorCode::DimensionMismatch, "basis matrices must be square and equal size");
  }
  const int n = dim();

  flat_.resize(d * d, n);
  for (int i = 0; i < n; ++i) flat_.col(i) = flatten(basis_[static_cast<std::size_t>(i)]);
  qr_.compute(flat_);
  if (qr_.rank() != n) throw Error(ErrorCode::InvalidParams, "basis matrices are linearly dependent");

  ad_.assign(static_cast<std::size_t>(n), Mat::Zero(n, n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const Mat& bi = basis_[static_cast<std::size_t>(i)];
      const Mat& bj = basis_[static_cast<std::size_t>(j)];
      double res = 0.0;
      ad_[static_cast<std::size_t>(i)].col(j) = coords_of(bi * bj - bj * bi, &res);
      residuals_.closure = std::max(residuals_.closure, res);
    }
  }
  if (residuals_.closure > 1e-9)
    throw Error(ErrorCode::NotClosedUnderBracket, id_ + " basis is not closed under the commutator");

  theta_.resize(n, n);
  for (int j = 0; j < n; ++j) {
    double res = 0.0;
    theta_.col(j) = coords_of(-basis_[static_cast<std::size_t>(j)].transpose(), &res);
    residuals_.theta_closure = std::max(residuals_.theta_closure, res);
  }
  if (residuals_.theta_closure > 1e-9)
    throw Error(ErrorCode::ThetaNotInvolutive, id_ + " is not stable under X -> -X^T");
  residuals_.theta_involution = (theta_ * theta_ - Mat::Identity(n, n)).cwiseAbs().maxCoeff();

  form_.resize(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      form_(i, j) = form_scale_ * (ad_[static_cast<std::size_t>(i)] * ad_[static_cast<std::size_t>(j)]).trace();
  residuals_.form_symmetry = (form_ - form_.transpose()).cwiseAbs().maxCoeff();

  gram_ = -form_ * theta_;
  residuals_.gram_symmetry = (gram_ - gram_.transpose()).cwiseAbs().maxCoeff();
  gram_ = 0.5 * (gram_ + gram_.transpose());
  Eigen::LLT<Mat> llt(gram_);
  if (llt.info() != Eigen::Success)
    throw Error(ErrorCode::IndefiniteForm, id_ + ": -B(X, theta Y) is not positive definite");

  for (int i = 0; i < n; ++i) {
    const Mat& adz = ad_[static_cast<std::size_t>(i)];
    residuals_.form_invariance = std::max(
        residuals_.form_invariance, (adz.transpose() * form_ + form_ * adz).cwiseAbs().maxCoeff());
    for (int j = 0; j < n; ++j) {
      const Vec ei = Vec::Unit(n, i), ej = Vec::Unit(n, j);
      const Vec lhs = theta_ * bracket(ei, ej);
      const Vec rhs = bracket(theta_.col(i), theta_.col(j));
      residuals_.theta_automorphism =
          std::max(residuals_.theta_automorphism, (lhs - rhs).cwiseAbs().maxCoeff());
      for (int k = 0; k < n; ++k) {
        const Vec ek = Vec::Unit(n, k);
        const Vec jac = bracket(ei, bracket(ej, ek)) + bracket(ej, bracket(ek, ei)) +
                        bracket(ek, bracket(ei, ej));
        residuals_.jacobi = std::max(residuals_.jacobi, jac.cwiseAbs().maxCoeff());
      }
    }
  }

  for (const auto& h : cartan_hint) {
    double res = 0.0;
    hint_.push_back(coords_of(h, &res));
    if (res > 1e-9) throw Error(ErrorCode::InvalidParams, id_ + ": Cartan hint outside the algebra");
  }
}

void LieAlgebra::check_dim(const Vec& x) const {
  if (x.size() != dim())
    throw Error(ErrorCode::DimensionMismatch,
                "vector of size " + std::to_string(x.size()) + " in algebra of dimension " +
                    std::to_string(dim()));
}

Mat LieAlgebra::matrix_of(const Vec& x) const {
  check_dim(x);
  const Eigen::Index d = basis_.front().rows();
  Mat m = Mat::Zero(d, d);
  for (int i = 0; i < dim(); ++i) m += x(i) * basis_[static_cast<std::size_t>(i)];
  return m;
}

Vec LieAlgebra::coords_of(const Mat& m, double* residual) const {
  const Eigen::Index d = basis_.front().rows();
  if (m.rows() != d || m.cols() != d)
    throw Error(ErrorCode::DimensionMismatch, "matrix size does not match the realization");
  const Vec f = flatten(m);
  Vec x = qr_.solve(f);
  if (residual) *residual = (flat_ * x - f).norm();
  return x;
}

Vec LieAlgebra::bracket(const Vec& x, const Vec& y) const {
  check_dim(x);
  check_dim(y);
  return ad(x) * y;
}

Mat LieAlgebra::ad(const Vec& x) const {
  check_dim(x);
  Mat a = Mat::Zero(dim(), dim());
  for (int i = 0; i < dim(); ++i)
    if (x(i) != 0.0) a += x(i) * ad_[static_cast<std::size_t>(i)];
  return a;
}

Vec LieAlgebra::theta(const Vec& x) const {
  check_dim(x);
  return theta_ * x;
}

double LieAlgebra::form(const Vec& x, const Vec& y) const {
  check_dim(x);
  check_dim(y);
  return x.dot(form_ * y);
}

double LieAlgebra::inner(const Vec& x, const Vec& y) const {
  check_dim(x);
  check_dim(y);
  return x.dot(gram_ * y);
}

double LieAlgebra::norm(const Vec& x) const { return std::sqrt(std::max(0.0, inner(x, x))); }

Mat CartanDecomposition::full_basis() const {
  Mat w(k_basis.rows(), k_basis.cols() + p_basis.cols());
  w << k_basis, p_basis;
  return w;
}

Vec k_part(const LieAlgebra& g, const Vec& x) { return 0.5 * (x + g.theta(x)); }
Vec p_part(const LieAlgebra& g, const Vec& x) { return 0.5 * (x - g.theta(x)); }

CartanDecomposition cartan_decompose(const LieAlgebra& g, double tol) {
  const int n = g.dim();
  const Mat& t = g.theta_matrix();
  if ((t * t - Mat::Identity(n, n)).cwiseAbs().maxCoeff() > tol)
    throw Error(ErrorCode::ThetaNotInvolutive, g.id() + ": theta^2 != id");

  CartanDecomposition c;
  const Mat id = Mat::Identity(n, n);
  c.k_basis = orthonormalize(0.5 * (id + t), g.gram());
  c.p_basis = orthonormalize(0.5 * (id - t), g.gram());
  if (c.dim_k() + c.dim_p() != n)
    throw Error(ErrorCode::ThetaNotInvolutive, g.id() + ": eigenspaces do not span the algebra");

  auto worst = [&](const Mat& u, const Mat& v, bool want_k) {
    double r = 0.0;
    for (Eigen::Index i = 0; i < u.cols(); ++i)
      for (Eigen::Index j = 0; j < v.cols(); ++j) {
        const Vec b = g.bracket(u.col(i), v.col(j));
        const Vec off = want_k ? p_part(g, b) : k_part(g, b);
        r = std::max(r, g.norm(off));
      }
    return r;
  };
  c.kk_residual = worst(c.k_basis, c.k_basis, true);
  c.kp_residual = worst(c.k_basis, c.p_basis, false);
  c.pp_residual = worst(c.p_basis, c.p_basis, true);
  return c;
}

double ad_adjointness_residual(const LieAlgebra& g, const CartanDecomposition& cartan) {
  const Mat& gram = g.gram();
  double r = 0.0;
  for (Eigen::Index i = 0; i < cartan.p_basis.cols(); ++i) {
    const Mat a = g.ad(cartan.p_basis.col(i));
    r = std::max(r, (gram * a - a.transpose() * gram).cwiseAbs().maxCoeff());
  }
  for (Eigen::Index i = 0; i < cartan.k_basis.cols(); ++i) {
    const Mat a = g.ad(cartan.k_basis.col(i));
    r = std::max(r, (gram * a + a.transpose() * gram).cwiseAbs().maxCoeff());
  }
  return r;
}

}  // namespace lieharm
