#pragma once

#include <Eigen/Dense>

#include <cstddef>
#include <vector>

#include "lieharm/rational.hpp"

namespace lieharm {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

using RationalRow = std::vector<Rational>;

/// Basis of the null space of an exact linear system, one vector per free
/// column of the reduced row echelon form (free columns in increasing order,
/// each basis vector carrying a 1 in its own free column).
std::vector<RationalRow> rational_kernel(std::vector<RationalRow> rows, std::size_t cols);

/// Gram-Schmidt of the columns of `candidates` in the inner product `gram`,
/// processed left to right; columns whose residual norm falls below
/// tol * max(1, |column|) are skipped. Two passes per column.
Mat orthonormalize(const Mat& candidates, const Mat& gram, double tol = 1e-9);

/// Null space of `a` (columns, Euclidean-orthonormal), using singular values
/// below tol * max(1, sigma_max).
Mat null_space(const Mat& a, double tol = 1e-9);

/// G-norm of the component of v orthogonal to the span of the G-orthonormal
/// columns of `basis`.
double distance_to_span(const Mat& basis, const Mat& gram, const Vec& v);

/// Component of v orthogonal to the G-orthonormal columns of `basis`.
Vec reject(const Mat& basis, const Mat& gram, const Vec& v);

/// G-orthonormal basis of span(u) ∩ span(v).
Mat intersect_spans(const Mat& u, const Mat& v, const Mat& gram, double tol = 1e-9);

/// Horizontal concatenation of column blocks (empty blocks allowed).
Mat hstack(const std::vector<Mat>& blocks, Eigen::Index rows);

}  // namespace lieharm
