#include "lieharm/rankone.hpp"

#include <algorithm>
#include <cmath>

#include <unsupported/Eigen/MatrixFunctions>

#include "lieharm/error.hpp"

namespace lieharm {
namespace {

Mat exp_nilpotent(const Mat& x) {
  const Eigen::Index d = x.rows();
  Mat term = Mat::Identity(d, d);
  Mat sum = term;
  for (Eigen::Index k = 1; k < d; ++k) {
    term = term * x / static_cast<double>(k);
    sum += term;
  }
  return sum;
}

double nilpotency_defect(const Mat& z) {
  Mat p = Mat::Identity(z.rows(), z.cols());
  for (Eigen::Index k = 0; k < z.rows(); ++k) p = p * z;
  return p.cwiseAbs().maxCoeff();
}

}  // namespace

HyperbolicType hyperbolic_type(int m_2beta) {
  switch (m_2beta) {
    case 0: return HyperbolicType::Real;
    case 1: return HyperbolicType::Complex;
    case 3: return HyperbolicType::Quaternionic;
    case 7: return HyperbolicType::Octonionic;
    default: return HyperbolicType::Unknown;
  }
}

std::string to_string(HyperbolicType t) {
  switch (t) {
    case HyperbolicType::Real: return "real";
    case HyperbolicType::Complex: return "complex";
    case HyperbolicType::Quaternionic: return "quaternionic";
    case HyperbolicType::Octonionic: return "octonionic";
    case HyperbolicType::Unknown: break;
  }
  return "unknown";
}

RankOneData build_rank_one(const LieAlgebra& g, const CartanDecomposition& cartan,
                           const RestrictedRootSystem& system, std::size_t beta) {
  if (std::find(system.simples.begin(), system.simples.end(), beta) == system.simples.end())
    throw Error(ErrorCode::InvalidParams, "build_rank_one needs a simple root");
  const auto& root = system.roots[beta];
  const auto& gram = g.gram();

  RankOneData r;
  r.beta = beta;
  r.two_beta = system.doubled(beta);
  r.beta_coords = root.coords;
  r.h_beta = root.h_alpha;
  r.beta_norm2 = root.coords.squaredNorm();
  r.m_beta = root.multiplicity;
  r.m_2beta = r.two_beta ? system.roots[*r.two_beta].multiplicity : 0;
  r.dim_m_beta = 1 + r.m_beta + r.m_2beta;
  r.type = hyperbolic_type(r.m_2beta);
  r.a_beta_unit = r.h_beta / g.norm(r.h_beta);

  for (int i = 0; i < system.rank; ++i)
    r.dual_residual = std::max(r.dual_residual,
                               std::abs(root.coords(i) - g.inner(r.h_beta, system.a.basis.col(i))));

  r.n_beta_basis = r.two_beta ? hstack({root.space, system.roots[*r.two_beta].space}, g.dim()) : root.space;

  const auto neg = system.find(-root.coords);
  if (!neg) throw Error(ErrorCode::DecompositionFailure, "missing -beta");
  const Mat gens = hstack({root.space, system.roots[*neg].space}, g.dim());
  Mat span = orthonormalize(gens, gram);
  for (int it = 0; it < g.dim(); ++it) {
    std::vector<Mat> blocks{span};
    Mat br(g.dim(), span.cols() * gens.cols());
    for (Eigen::Index i = 0; i < span.cols(); ++i)
      for (Eigen::Index j = 0; j < gens.cols(); ++j) br.col(i * gens.cols() + j) = g.bracket(gens.col(j), span.col(i));
    blocks.push_back(br);
    Mat next = orthonormalize(hstack(blocks, g.dim()), gram);
    const bool stable = next.cols() == span.cols();
    span = std::move(next);
    if (stable) break;
  }
  r.g_beta_full = span;

  for (Eigen::Index i = 0; i < span.cols(); ++i) {
    r.theta_stability_residual =
        std::max(r.theta_stability_residual, distance_to_span(span, gram, g.theta(span.col(i))));
    for (Eigen::Index j = 0; j < span.cols(); ++j)
      r.closure_residual =
          std::max(r.closure_residual, distance_to_span(span, gram, g.bracket(span.col(i), span.col(j))));
  }
  Mat sym(g.dim(), span.cols());
  for (Eigen::Index i = 0; i < span.cols(); ++i) sym.col(i) = k_part(g, span.col(i));
  r.k_beta_basis = orthonormalize(sym, gram);
  r.k_beta_intersection = intersect_spans(span, cartan.k_basis, gram);
  r.dim_p_beta = static_cast<int>(span.cols() - r.k_beta_basis.cols());
  return r;
}

NAGroup::NAGroup(const LieAlgebra& g, const RestrictedRootSystem& system)
    : n_basis_(system.n_basis()), a_basis_(system.a.basis), gram_(g.gram()), d_(g.matrix_size()) {
  n_roots_.resize(n_basis_.cols(), system.rank);
  Eigen::Index row = 0;
  for (std::size_t i = 0; i < system.num_positive; ++i)
    for (int k = 0; k < system.roots[i].multiplicity; ++k) n_roots_.row(row++) = system.roots[i].coords.transpose();

  for (Eigen::Index i = 0; i < n_basis_.cols(); ++i) n_mats_.push_back(g.matrix_of(n_basis_.col(i)));
  for (Eigen::Index i = 0; i < a_basis_.cols(); ++i) a_mats_.push_back(g.matrix_of(a_basis_.col(i)));
  n_flat_.resize(static_cast<Eigen::Index>(d_) * d_, n_basis_.cols());
  for (std::size_t i = 0; i < n_mats_.size(); ++i)
    n_flat_.col(static_cast<Eigen::Index>(i)) = Eigen::Map<const Vec>(n_mats_[i].data(), n_mats_[i].size());
  n_qr_.compute(n_flat_);
}

GroupPoint NAGroup::identity() const { return {Vec::Zero(dim_n()), Vec::Zero(rank())}; }

Mat NAGroup::n_matrix(const Vec& x) const {
  Mat m = Mat::Zero(d_, d_);
  for (std::size_t i = 0; i < n_mats_.size(); ++i) m += x(static_cast<Eigen::Index>(i)) * n_mats_[i];
  return m;
}

Mat NAGroup::a_matrix(const Vec& h) const {
  Mat m = Mat::Zero(d_, d_);
  for (std::size_t i = 0; i < a_mats_.size(); ++i) m += h(static_cast<Eigen::Index>(i)) * a_mats_[i];
  return m;
}

GroupPoint NAGroup::make_point(const Vec& x, const Vec& h) const {
  if (x.size() != dim_n() || h.size() != rank())
    throw Error(ErrorCode::DimensionMismatch, "group point needs " + std::to_string(dim_n()) + " X and " +
                                                  std::to_string(rank()) + " H coordinates");
  if (!x.allFinite() || !h.allFinite()) throw Error(ErrorCode::MalformedInput, "non-finite group point");
  const Mat xm = n_matrix(x);
  if (nilpotency_defect(xm) > 1e-9 * std::pow(1.0 + xm.cwiseAbs().maxCoeff(), d_))
    throw Error(ErrorCode::NonUnipotentProduct, "X matrix is not nilpotent");
  return {x, h};
}

Vec NAGroup::log_n(const Mat& m) const {
  const Mat z = m - Mat::Identity(d_, d_);
  const double scale = 1.0 + z.cwiseAbs().maxCoeff();
  if (nilpotency_defect(z) > 1e-9 * std::pow(scale, d_))
    throw Error(ErrorCode::NonUnipotentProduct, "product is not unipotent");
  Mat term = z, sum = z;
  for (int k = 2; k < d_; ++k) {
    term = term * z;
    sum += ((k % 2 == 0) ? -1.0 : 1.0) / k * term;
  }
  const Vec f = Eigen::Map<const Vec>(sum.data(), sum.size());
  Vec x = n_qr_.solve(f);
  if ((n_flat_ * x - f).norm() > 1e-9 * std::pow(scale, d_))
    throw Error(ErrorCode::NonUnipotentProduct, "logarithm leaves n");
  return x;
}

GroupPoint NAGroup::multiply(const GroupPoint& a, const GroupPoint& b) const {
  const Vec twisted = b.X.cwiseProduct((n_roots_ * a.H).array().exp().matrix());
  return {log_n(exp_nilpotent(n_matrix(a.X)) * exp_nilpotent(n_matrix(twisted))), a.H + b.H};
}

GroupPoint NAGroup::inverse(const GroupPoint& a) const {
  return {-a.X.cwiseProduct((-(n_roots_ * a.H)).array().exp().matrix()), -a.H};
}

GroupPoint NAGroup::exp(const Vec& x, const Vec& h) const {
  const bool no_x = x.cwiseAbs().maxCoeff() == 0.0;
  const bool no_h = h.size() == 0 || h.cwiseAbs().maxCoeff() == 0.0;
  if (no_h) return {x, Vec::Zero(rank())};
  if (no_x) return {Vec::Zero(dim_n()), h};
  // exp(X + H) = n * exp(H) with n = exp(X + H) exp(-H)
  const Mat full = (n_matrix(x) + a_matrix(h)).exp();
  const Mat n_part = full * a_matrix(-h).exp();
  return {log_n(n_part), h};
}

Mat NAGroup::to_matrix(const GroupPoint& p) const {
  Eigen::SelfAdjointEigenSolver<Mat> eig(a_matrix(p.H));
  const Mat ea = eig.eigenvectors() * eig.eigenvalues().array().exp().matrix().asDiagonal() *
                 eig.eigenvectors().transpose();
  return exp_nilpotent(n_matrix(p.X)) * ea;
}

std::pair<GroupPoint, double> NAGroup::split(const Vec& v) const {
  GroupPoint p{n_basis_.transpose() * gram_ * v, a_basis_.transpose() * gram_ * v};
  const Vec rest = v - n_basis_ * p.X - a_basis_ * p.H;
  return {p, std::sqrt(std::max(0.0, rest.dot(gram_ * rest)))};
}

SubmersionProjection build_projection(const LieAlgebra& g, const RestrictedRootSystem& system,
                                      const RankOneData& rankone, const NAGroup& group, double tol) {
  const Mat& gram = g.gram();
  SubmersionProjection pi;
  std::vector<Mat> tb{rankone.n_beta_basis, Mat(rankone.a_beta_unit)};
  pi.target_basis = hstack(tb, g.dim());

  std::vector<Mat> kb;
  for (auto i : system.positives_without(rankone.beta)) kb.push_back(system.roots[i].space);
  Mat a_cand(g.dim(), 1 + system.rank);
  a_cand << rankone.a_beta_unit, system.a.basis;
  const Mat a_adapted = orthonormalize(a_cand, gram);
  kb.push_back(a_adapted.rightCols(a_adapted.cols() - 1));
  pi.kernel_basis = hstack(kb, g.dim());
  pi.source_frame = hstack({pi.kernel_basis, pi.target_basis}, g.dim());
  if (pi.source_frame.cols() != group.dim_n() + group.rank())
    throw Error(ErrorCode::DimensionMismatch, "kernel and image do not span n + a");

  const Mat& f = pi.source_frame;
  const Mat& t = pi.target_basis;
  const Mat proj_alg = t * t.transpose() * gram;  // algebra-level orthogonal projection onto the image
  pi.pi_matrix = f.transpose() * gram * proj_alg * f;
  const Mat& nb = group.n_basis();
  const Mat& ab = group.a_basis();
  pi.pi_n = nb.transpose() * gram * proj_alg * nb;
  pi.pi_a = ab.transpose() * gram * proj_alg * ab;

  const Mat& p = pi.pi_matrix;
  pi.idempotence_residual = (p * p - p).cwiseAbs().maxCoeff();
  pi.self_adjoint_residual = (p - p.transpose()).cwiseAbs().maxCoeff();

  for (Eigen::Index i = 0; i < f.cols(); ++i) {
    for (Eigen::Index j = 0; j < f.cols(); ++j) {
      const Vec b = g.bracket(f.col(i), f.col(j));
      if (i < pi.kernel_basis.cols())
        pi.ideal_residual = std::max(pi.ideal_residual, distance_to_span(pi.kernel_basis, gram, b));
      const Vec lhs = proj_alg * b;
      const Vec rhs = g.bracket(proj_alg * f.col(i), proj_alg * f.col(j));
      pi.homomorphism_residual = std::max(pi.homomorphism_residual, g.norm(lhs - rhs));
    }
  }
  pi.isometry_residual = std::max((t.transpose() * gram * t - Mat::Identity(t.cols(), t.cols())).cwiseAbs().maxCoeff(),
                                  (proj_alg * t - t).cwiseAbs().maxCoeff());
  if (pi.ideal_residual > tol)
    throw Error(ErrorCode::IdealCheckFailure, "ker pi is not an ideal of n + a (residual " +
                                                  std::to_string(pi.ideal_residual) + ")");
  return pi;
}

GroupPoint project_point(const SubmersionProjection& pi, const GroupPoint& p) {
  return {pi.pi_n * p.X, pi.pi_a * p.H};
}

}  // namespace lieharm
