#include "lieharm/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

namespace lieharm {

std::vector<RationalRow> rational_kernel(std::vector<RationalRow> rows, std::size_t cols) {
  std::vector<std::size_t> pivot_cols;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t sel = r;
    while (sel < rows.size() && rows[sel][c].is_zero()) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[sel], rows[r]);
    const Rational inv = Rational(1) / rows[r][c];
    for (auto& x : rows[r]) x *= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c].is_zero()) continue;
      const Rational f = rows[i][c];
      for (std::size_t j = c; j < cols; ++j) {
        if (!rows[r][j].is_zero()) rows[i][j] -= f * rows[r][j];
      }
    }
    pivot_cols.push_back(c);
    ++r;
  }

  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivot_cols) is_pivot[c] = true;

  std::vector<RationalRow> kernel;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    RationalRow v(cols, Rational(0));
    v[f] = Rational(1);
    for (std::size_t k = 0; k < pivot_cols.size(); ++k) v[pivot_cols[k]] = -rows[k][f];
    kernel.push_back(std::move(v));
  }
  return kernel;
}

Mat orthonormalize(const Mat& candidates, const Mat& gram, double tol) {
  std::vector<Vec> out;
  for (Eigen::Index j = 0; j < candidates.cols(); ++j) {
    Vec v = candidates.col(j);
    const double n0 = std::sqrt(std::max(0.0, v.dot(gram * v)));
    for (int pass = 0; pass < 2; ++pass) {
      for (const auto& q : out) v -= q.dot(gram * v) * q;
    }
    const double n1 = std::sqrt(std::max(0.0, v.dot(gram * v)));
    if (n1 > tol * std::max(1.0, n0)) out.push_back(v / n1);
  }
  Mat q(candidates.rows(), static_cast<Eigen::Index>(out.size()));
  for (std::size_t i = 0; i < out.size(); ++i) q.col(static_cast<Eigen::Index>(i)) = out[i];
  return q;
}

Mat null_space(const Mat& a, double tol) {
  if (a.rows() == 0) return Mat::Identity(a.cols(), a.cols());
  Eigen::JacobiSVD<Mat> svd(a, Eigen::ComputeFullV);
  const auto& s = svd.singularValues();
  const double smax = s.size() ? s(0) : 0.0;
  const double cut = tol * std::max(1.0, smax);
  Eigen::Index rank = 0;
  for (Eigen::Index i = 0; i < s.size(); ++i)
    if (s(i) > cut) ++rank;
  return svd.matrixV().rightCols(a.cols() - rank);
}

Vec reject(const Mat& basis, const Mat& gram, const Vec& v) {
  Vec r = v;
  for (int pass = 0; pass < 2; ++pass) {
    for (Eigen::Index j = 0; j < basis.cols(); ++j) {
      r -= basis.col(j).dot(gram * r) * basis.col(j);
    }
  }
  return r;
}

double distance_to_span(const Mat& basis, const Mat& gram, const Vec& v) {
  const Vec r = reject(basis, gram, v);
  return std::sqrt(std::max(0.0, r.dot(gram * r)));
}

Mat intersect_spans(const Mat& u, const Mat& v, const Mat& gram, double tol) {
  if (u.cols() == 0 || v.cols() == 0) return Mat(u.rows(), 0);
  Mat stacked(u.rows(), u.cols() + v.cols());
  stacked << u, -v;
  const Mat kernel = null_space(stacked, tol);
  const Mat in_u = u * kernel.topRows(u.cols());
  return orthonormalize(in_u, gram, tol);
}

Mat hstack(const std::vector<Mat>& blocks, Eigen::Index rows) {
  Eigen::Index cols = 0;
  for (const auto& b : blocks) cols += b.cols();
  Mat out(rows, cols);
  Eigen::Index at = 0;
  for (const auto& b : blocks) {
    if (b.cols() == 0) continue;
    out.middleCols(at, b.cols()) = b;
    at += b.cols();
  }
  return out;
}

}  // namespace lieharm
