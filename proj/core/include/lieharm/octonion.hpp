#pragma once

#include <array>

namespace lieharm {

/// Split octonions in the Cayley-Dickson basis {1, i, j, k, l, il, jl, kl}
/// built from the quaternions with l*l = +1. The quadratic norm has
/// signature (4, 4): positive on the quaternion half, negative on the l half.
using Octonion = std::array<double, 8>;

Octonion split_octonion_multiply(const Octonion& x, const Octonion& y);

double split_octonion_norm(const Octonion& x);

using OctonionTable = std::array<std::array<std::array<int, 8>, 8>, 8>;

/// Structure constants m[a][b][c] with e_a e_b = sum_c m[a][b][c] e_c.
const OctonionTable& split_octonion_table();

}  // namespace lieharm
