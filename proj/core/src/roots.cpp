#include "lieharm/roots.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "lieharm/error.hpp"

namespace lieharm {
namespace {

// Matrix of ad(H) in the G-orthonormal basis W: symmetric for H in p.
Mat symmetric_ad(const LieAlgebra& g, const Mat& w, const Vec& h) {
  Mat s = w.transpose() * g.gram() * g.ad(h) * w;
  return 0.5 * (s + s.transpose());
}

struct Cluster {
  Mat vectors;  // algebra coordinates, G-orthonormal
  Vec values;   // on the orthonormal a basis
  double reg_value = 0.0;
};

}  // namespace

Mat centralizer_in_p(const LieAlgebra& g, const CartanDecomposition& cartan, const Mat& a_basis,
                     double tol) {
  const Mat& p = cartan.p_basis;
  if (a_basis.cols() == 0) return p;
  Mat stacked(g.dim() * a_basis.cols(), p.cols());
  for (Eigen::Index i = 0; i < a_basis.cols(); ++i)
    stacked.middleRows(i * g.dim(), g.dim()) = g.ad(a_basis.col(i)) * p;
  return orthonormalize(p * null_space(stacked, tol), g.gram());
}

MaximalAbelian maximal_abelian(const LieAlgebra& g, const CartanDecomposition& cartan, double tol) {
  std::vector<Vec> candidates;
  for (const auto& h : g.cartan_hint()) candidates.push_back(h);
  for (Eigen::Index j = 0; j < cartan.p_basis.cols(); ++j) candidates.push_back(cartan.p_basis.col(j));

  std::vector<Vec> chosen, ortho;
  auto as_mat = [&](const std::vector<Vec>& v) {
    Mat m(g.dim(), static_cast<Eigen::Index>(v.size()));
    for (std::size_t i = 0; i < v.size(); ++i) m.col(static_cast<Eigen::Index>(i)) = v[i];
    return m;
  };
  auto try_add = [&](const Vec& c) {
    const Vec cp = p_part(g, c);
    const double nc = g.norm(cp);
    if (nc < 1e-12) return;
    for (const auto& h : ortho)
      if (g.norm(g.bracket(cp, h)) > tol * std::max(1.0, nc)) return;
    const Vec r = reject(as_mat(ortho), g.gram(), cp);
    const double nr = g.norm(r);
    if (nr < 1e-8 * nc) return;
    chosen.push_back(cp);
    ortho.push_back(r / nr);
  };
  for (const auto& c : candidates) try_add(c);

  for (int guard = 0; guard <= g.dim(); ++guard) {
    const Mat z = centralizer_in_p(g, cartan, as_mat(ortho));
    if (z.cols() <= static_cast<Eigen::Index>(ortho.size())) break;
    const std::size_t before = ortho.size();
    for (Eigen::Index j = 0; j < z.cols() && ortho.size() == before; ++j) try_add(z.col(j));
    if (ortho.size() == before) break;
  }

  MaximalAbelian a;
  a.basis = as_mat(ortho);
  a.lattice_basis = as_mat(chosen);
  a.rank = static_cast<int>(ortho.size());
  for (const auto& x : ortho)
    for (const auto& y : ortho) a.abelian_residual = std::max(a.abelian_residual, g.norm(g.bracket(x, y)));
  a.centralizer_dim = static_cast<int>(centralizer_in_p(g, cartan, a.basis).cols());
  return a;
}

std::optional<std::size_t> RestrictedRootSystem::find(const Vec& coords, double tol) const {
  for (std::size_t i = 0; i < roots.size(); ++i)
    if ((roots[i].coords - coords).cwiseAbs().maxCoeff() < tol) return i;
  return std::nullopt;
}

int RestrictedRootSystem::multiplicity_of(const Vec& coords) const {
  auto i = find(coords);
  return i ? roots[*i].multiplicity : 0;
}

double RestrictedRootSystem::ip(std::size_t i, std::size_t j) const {
  return roots[i].coords.dot(roots[j].coords);
}

std::optional<std::size_t> RestrictedRootSystem::doubled(std::size_t i) const {
  return find(2.0 * roots[i].coords);
}

std::vector<std::size_t> RestrictedRootSystem::positives_without(std::size_t beta) const {
  const auto two = doubled(beta);
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < num_positive; ++i)
    if (i != beta && (!two || i != *two)) out.push_back(i);
  return out;
}

double RestrictedRootSystem::two_rho_pairing(std::size_t beta) const {
  double s = 0.0;
  for (std::size_t i = 0; i < num_positive; ++i) s += roots[i].multiplicity * ip(i, beta);
  return s;
}

Mat RestrictedRootSystem::n_basis() const {
  std::vector<Mat> blocks;
  for (std::size_t i = 0; i < num_positive; ++i) blocks.push_back(roots[i].space);
  return hstack(blocks, h_reg.size());
}

RestrictedRootSystem extract_roots(const LieAlgebra& g, const CartanDecomposition& cartan,
                                   const MaximalAbelian& a, const RootTolerances& tol) {
  if (a.rank == 0) throw Error(ErrorCode::NonMaximalA, g.id() + ": a is zero (compact algebra?)");
  if (a.abelian_residual > tol.identity)
    throw Error(ErrorCode::NonMaximalA, g.id() + ": a is not abelian");
  const Mat z = centralizer_in_p(g, cartan, a.basis);
  if (z.cols() != a.rank)
    throw Error(ErrorCode::NonMaximalA, g.id() + ": centralizer of a in p has dimension " +
                                            std::to_string(z.cols()) + " > rank " + std::to_string(a.rank));

  RestrictedRootSystem sys;
  sys.a = a;
  sys.rank = a.rank;
  const int n = g.dim();
  const int r = a.rank;

  sys.h_reg = Vec::Zero(n);
  for (int i = 0; i < r; ++i) sys.h_reg += std::pow(10.0, r - 1 - i) * a.basis.col(i);

  const Mat w = cartan.full_basis();
  Eigen::SelfAdjointEigenSolver<Mat> eig(symmetric_ad(g, w, sys.h_reg));
  const Vec& evals = eig.eigenvalues();
  const Mat& evecs = eig.eigenvectors();

  std::vector<Mat> s_dir;
  for (int i = 0; i < r; ++i) s_dir.push_back(symmetric_ad(g, w, a.basis.col(i)));

  std::vector<Cluster> clusters;
  for (Eigen::Index start = 0; start < n;) {
    Eigen::Index end = start + 1;
    while (end < n && evals(end) - evals(end - 1) < tol.cluster) ++end;
    const Mat v = evecs.middleCols(start, end - start);
    Cluster c;
    c.values.resize(r);
    for (int i = 0; i < r; ++i) {
      const Mat block = v.transpose() * s_dir[static_cast<std::size_t>(i)] * v;
      c.values(i) = block.trace() / static_cast<double>(block.rows());
      const double dev = (block - c.values(i) * Mat::Identity(block.rows(), block.rows())).cwiseAbs().maxCoeff();
      sys.cluster_residual = std::max(sys.cluster_residual, dev);
      if (dev > 1e-6)
        throw Error(ErrorCode::ClusteringAmbiguity,
                    g.id() + ": ad(H_reg) eigenvalue " + std::to_string(evals(start)) +
                        " hides distinct values along a direction " + std::to_string(i));
    }
    c.reg_value = evals.segment(start, end - start).mean();
    // re-derive a basis of the eigenspace with fixed pivoting in algebra coordinates
    const Mat proj = w * v * v.transpose() * w.transpose() * g.gram();
    c.vectors = orthonormalize(proj, g.gram(), 1e-7);
    if (c.vectors.cols() != v.cols())
      throw Error(ErrorCode::ClusteringAmbiguity, g.id() + ": unstable eigenspace basis");
    clusters.push_back(std::move(c));
    start = end;
  }

  std::vector<RestrictedRoot> pos, neg;
  bool have_zero = false;
  for (auto& c : clusters) {
    if (c.values.cwiseAbs().maxCoeff() < 1e-7) {
      if (have_zero) throw Error(ErrorCode::ClusteringAmbiguity, g.id() + ": split zero eigenspace");
      have_zero = true;
      sys.g0 = c.vectors;
      continue;
    }
    if (std::abs(c.reg_value) <= tol.positivity)
      throw Error(ErrorCode::ClusteringAmbiguity, g.id() + ": H_reg is not regular");
    RestrictedRoot root;
    root.coords = c.values;
    root.h_alpha = a.basis * c.values;
    root.space = c.vectors;
    root.multiplicity = static_cast<int>(c.vectors.cols());
    root.reg_value = c.reg_value;
    root.positive = c.reg_value > tol.positivity;
    const Mat coeff = (a.basis.transpose() * g.gram() * a.lattice_basis);  // orthonormal coords of lattice vectors
    root.lattice_values = coeff.transpose() * c.values;
    for (Eigen::Index i = 0; i < root.lattice_values.size(); ++i)
      root.snapped.push_back(snap_rational(root.lattice_values(i), tol.max_denominator, tol.snap));
    (root.positive ? pos : neg).push_back(std::move(root));
  }
  if (!have_zero) throw Error(ErrorCode::NonMaximalA, g.id() + ": no zero eigenspace");
  if (pos.size() != neg.size()) throw Error(ErrorCode::DecompositionFailure, g.id() + ": Sigma != -Sigma");

  sys.roots = pos;
  sys.num_positive = pos.size();

  // simple roots and integer expansions
  const auto simples = simple_roots(sys);
  if (static_cast<int>(simples.size()) != r)
    throw Error(ErrorCode::DecompositionFailure,
                g.id() + ": found " + std::to_string(simples.size()) + " simple roots for rank " + std::to_string(r));
  Mat sm(r, r);
  for (int i = 0; i < r; ++i) sm.col(i) = sys.roots[simples[static_cast<std::size_t>(i)]].coords;
  const Eigen::FullPivLU<Mat> lu(sm);
  for (auto& root : sys.roots) {
    const Vec c = lu.solve(root.coords);
    root.simple_coeffs.clear();
    root.height = 0;
    for (int i = 0; i < r; ++i) {
      const double k = std::round(c(i));
      if (std::abs(c(i) - k) > 1e-6 || k < 0)
        throw Error(ErrorCode::DecompositionFailure, g.id() + ": positive root is not an N-combination of simples");
      root.simple_coeffs.push_back(static_cast<int>(k));
      root.height += static_cast<int>(k);
    }
    if ((sm * c - root.coords).cwiseAbs().maxCoeff() > 1e-8)
      throw Error(ErrorCode::DecompositionFailure, g.id() + ": simple root expansion residual");
  }
  std::stable_sort(sys.roots.begin(), sys.roots.end(), [](const RestrictedRoot& x, const RestrictedRoot& y) {
    if (x.height != y.height) return x.height < y.height;
    return x.reg_value > y.reg_value;
  });

  for (std::size_t i = 0; i < sys.num_positive; ++i) {
    const Vec target = -sys.roots[i].coords;
    auto it = std::find_if(neg.begin(), neg.end(), [&](const RestrictedRoot& x) {
      return (x.coords - target).cwiseAbs().maxCoeff() < 1e-7;
    });
    if (it == neg.end() || it->multiplicity != sys.roots[i].multiplicity)
      throw Error(ErrorCode::DecompositionFailure, g.id() + ": negative root missing or multiplicity mismatch");
    RestrictedRoot nr = *it;
    nr.simple_coeffs = sys.roots[i].simple_coeffs;
    for (auto& k : nr.simple_coeffs) k = -k;
    nr.height = -sys.roots[i].height;
    sys.roots.push_back(std::move(nr));
  }
  sys.simples = simple_roots(sys);

  // Without a Cartan hint the lattice vectors came from an arbitrary p basis;
  // use the simple coroot duals instead so the values are <alpha, alpha_i>.
  if (g.cartan_hint().empty()) {
    Mat lattice(g.dim(), r);
    for (int i = 0; i < r; ++i) lattice.col(i) = sys.roots[sys.simples[static_cast<std::size_t>(i)]].h_alpha;
    sys.a.lattice_basis = lattice;
    for (auto& root : sys.roots) {
      root.lattice_values.resize(r);
      root.snapped.clear();
      for (int i = 0; i < r; ++i) {
        root.lattice_values(i) = root.coords.dot(sys.roots[sys.simples[static_cast<std::size_t>(i)]].coords);
        root.snapped.push_back(snap_rational(root.lattice_values(i), tol.max_denominator, tol.snap));
      }
    }
  }
  return sys;
}

std::vector<std::size_t> simple_roots(const RestrictedRootSystem& system, double tol) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < system.num_positive; ++i) {
    bool decomposable = false;
    for (std::size_t j = 0; j < system.num_positive && !decomposable; ++j) {
      const Vec rest = system.roots[i].coords - system.roots[j].coords;
      for (std::size_t k = 0; k < system.num_positive; ++k) {
        if ((system.roots[k].coords - rest).cwiseAbs().maxCoeff() < tol) {
          decomposable = true;
          break;
        }
      }
    }
    if (!decomposable) out.push_back(i);
  }
  std::stable_sort(out.begin(), out.end(), [&](std::size_t x, std::size_t y) {
    return system.roots[x].reg_value > system.roots[y].reg_value;
  });
  return out;
}

double root_bracket_residual(const LieAlgebra& g, const RestrictedRootSystem& system) {
  // spaces indexed by root, plus g_0 as the zero functional
  std::vector<std::pair<Vec, const Mat*>> spaces;
  spaces.emplace_back(Vec::Zero(system.rank), &system.g0);
  for (const auto& r : system.roots) spaces.emplace_back(r.coords, &r.space);

  double worst = 0.0;
  for (const auto& [ca, sa] : spaces) {
    for (const auto& [cb, sb] : spaces) {
      const Vec sum = ca + cb;
      const Mat* target = nullptr;
      if (sum.cwiseAbs().maxCoeff() < 1e-7) target = &system.g0;
      else if (auto k = system.find(sum)) target = &system.roots[*k].space;
      for (Eigen::Index i = 0; i < sa->cols(); ++i) {
        for (Eigen::Index j = 0; j < sb->cols(); ++j) {
          const Vec b = g.bracket(sa->col(i), sb->col(j));
          const double off = target ? distance_to_span(*target, g.gram(), b) : g.norm(b);
          worst = std::max(worst, off);
        }
      }
    }
  }
  return worst;
}

double root_decomposition_residual(const LieAlgebra& g, const RestrictedRootSystem& system) {
  std::vector<Mat> blocks{system.g0};
  for (const auto& r : system.roots) blocks.push_back(r.space);
  const Mat q = hstack(blocks, g.dim());
  if (q.cols() != g.dim()) return std::numeric_limits<double>::infinity();
  return (q.transpose() * g.gram() * q - Mat::Identity(g.dim(), g.dim())).cwiseAbs().maxCoeff();
}

Vec reflect(const RestrictedRootSystem& system, std::size_t beta, const Vec& alpha) {
  const Vec& b = system.roots[beta].coords;
  return alpha - 2.0 * alpha.dot(b) / b.dot(b) * b;
}

std::size_t root_reflection(const RestrictedRootSystem& system, std::size_t beta, std::size_t alpha) {
  const Vec image = reflect(system, beta, system.roots[alpha].coords);
  auto k = system.find(image);
  if (!k) throw Error(ErrorCode::DecompositionFailure, "root reflection left the root system");
  return *k;
}

Lemma1Report check_lemma1(const LieAlgebra& g, const RestrictedRootSystem& system, std::size_t beta) {
  if (std::find(system.simples.begin(), system.simples.end(), beta) == system.simples.end())
    throw Error(ErrorCode::InvalidParams, "check_lemma1 needs a simple root");

  Lemma1Report rep;
  rep.beta = beta;
  rep.sigma_plus_beta = system.positives_without(beta);
  rep.m_beta = system.roots[beta].multiplicity;
  const auto two = system.doubled(beta);
  rep.m_2beta = two ? system.roots[*two].multiplicity : 0;
  rep.araki_parity = (rep.m_beta % 2 == 0) || rep.m_2beta == 0;

  std::vector<Mat> nb_blocks;
  for (auto i : rep.sigma_plus_beta) nb_blocks.push_back(system.roots[i].space);
  const Mat n_beta = hstack(nb_blocks, g.dim());
  const Mat n = system.n_basis();
  for (Eigen::Index i = 0; i < n_beta.cols(); ++i)
    for (Eigen::Index j = 0; j < n.cols(); ++j)
      rep.ideal_residual =
          std::max(rep.ideal_residual, distance_to_span(n_beta, g.gram(), g.bracket(n_beta.col(i), n.col(j))));

  Vec v = Vec::Zero(system.rank);
  for (auto i : rep.sigma_plus_beta) {
    rep.weighted_sum += system.roots[i].multiplicity * system.ip(i, beta);
    v += system.roots[i].multiplicity * system.roots[i].coords;
    const auto img = system.find(reflect(system, beta, system.roots[i].coords));
    const bool inside = img && std::find(rep.sigma_plus_beta.begin(), rep.sigma_plus_beta.end(), *img) !=
                                   rep.sigma_plus_beta.end();
    if (!inside || system.roots[*img].multiplicity != system.roots[i].multiplicity) rep.reflection_permutes = false;
  }
  rep.sum_invariance_residual = (reflect(system, beta, v) - v).cwiseAbs().maxCoeff();
  return rep;
}

}  // namespace lieharm
