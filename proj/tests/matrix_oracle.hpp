#pragma once

// Characteristic polynomial of left multiplication on T(Lambda), Lambda = [[0,1],[-1,0]] mod 3,
// viewed as a free right module with basis 1, X2, X2^2 over the commutative subalgebra
// L spanned by X^(a, 3b).

#include <array>

#include "rootqca/torus.hpp"

namespace testing {

using rootqca::QuantumTorus;
using rootqca::TorusElement;

using Mat3 = std::array<std::array<TorusElement, 3>, 3>;

inline long floor_div(long a, long b) { return a >= 0 ? a / b : -((-a + b - 1) / b); }

// a X2^j = sum_i X2^i M_ij with M_ij in L.
inline Mat3 left_mult_matrix(const QuantumTorus& T, const TorusElement& a) {
  Mat3 m{{{T.zero(), T.zero(), T.zero()}, {T.zero(), T.zero(), T.zero()}, {T.zero(), T.zero(), T.zero()}}};
  for (const auto& [f, c] : a.terms())
    for (long j = 0; j < 3; ++j) {
      const long q = floor_div(f[1] + j, 3);
      const long i = f[1] + j - 3 * q;
      m[i][j] += T.monomial({f[0], 3 * q}, c.times_zeta(f[0] * (i + j)));
    }
  return m;
}

// c1, c2, c3 with det(t - M) = t^3 - c1 t^2 + c2 t - c3.
inline std::array<TorusElement, 3> char_poly(const QuantumTorus& T, const Mat3& m) {
  const auto mul = [&](const TorusElement& x, const TorusElement& y) { return T.mul(x, y); };
  TorusElement c1 = m[0][0] + m[1][1] + m[2][2];
  TorusElement c2 = T.zero();
  for (int a = 0; a < 3; ++a)
    for (int b = a + 1; b < 3; ++b) c2 += mul(m[a][a], m[b][b]) - mul(m[a][b], m[b][a]);
  TorusElement c3 = T.zero();
  const int perms[6][3] = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}, {0, 2, 1}, {2, 1, 0}, {1, 0, 2}};
  for (int p = 0; p < 6; ++p) {
    const auto term = mul(mul(m[0][perms[p][0]], m[1][perms[p][1]]), m[2][perms[p][2]]);
    if (p < 3)
      c3 += term;
    else
      c3 -= term;
  }
  return {c1, c2, c3};
}

}  // namespace testing
