#include "lieharm/octonion.hpp"

namespace lieharm {
namespace {

using Quat = std::array<double, 4>;

Quat qmul(const Quat& a, const Quat& b) {
  return {a[0] * b[0] - a[1] * b[1] - a[2] * b[2] - a[3] * b[3],
          a[0] * b[1] + a[1] * b[0] + a[2] * b[3] - a[3] * b[2],
          a[0] * b[2] - a[1] * b[3] + a[2] * b[0] + a[3] * b[1],
          a[0] * b[3] + a[1] * b[2] - a[2] * b[1] + a[3] * b[0]};
}

Quat qconj(const Quat& a) { return {a[0], -a[1], -a[2], -a[3]}; }

Quat qadd(const Quat& a, const Quat& b) {
  return {a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3]};
}

OctonionTable build_table() {
  OctonionTable t{};
  for (int a = 0; a < 8; ++a) {
    for (int b = 0; b < 8; ++b) {
      Octonion x{}, y{};
      x[a] = 1.0;
      y[b] = 1.0;
      const Octonion p = split_octonion_multiply(x, y);
      for (int c = 0; c < 8; ++c) t[a][b][c] = static_cast<int>(p[c]);
    }
  }
  return t;
}

}  // namespace

// (a, b)(c, d) = (ac + lambda * conj(d) b, d a + b conj(c)), lambda = +1.
Octonion split_octonion_multiply(const Octonion& x, const Octonion& y) {
  const Quat a{x[0], x[1], x[2], x[3]}, b{x[4], x[5], x[6], x[7]};
  const Quat c{y[0], y[1], y[2], y[3]}, d{y[4], y[5], y[6], y[7]};
  const Quat lo = qadd(qmul(a, c), qmul(qconj(d), b));
  const Quat hi = qadd(qmul(d, a), qmul(b, qconj(c)));
  return {lo[0], lo[1], lo[2], lo[3], hi[0], hi[1], hi[2], hi[3]};
}

double split_octonion_norm(const Octonion& x) {
  double n = 0.0;
  for (int i = 0; i < 4; ++i) n += x[i] * x[i];
  for (int i = 4; i < 8; ++i) n -= x[i] * x[i];
  return n;
}

const OctonionTable& split_octonion_table() {
  static const OctonionTable table = build_table();
  return table;
}

}  // namespace lieharm
