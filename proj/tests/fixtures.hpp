#pragma once

#include "filiform/lie_algebra.hpp"

// Hand-rolled presentations, kept independent of the catalog constructors so
// the two can be checked against each other.
namespace fixtures {

using filiform::LieAlgebra;
using filiform::Rational;
using filiform::Vec;

inline Vec<Rational> axis(int n, int i, Rational c = Rational(1)) {
  Vec<Rational> v(n, Rational(0));
  v[i - 1] = c;
  return v;
}

/// Chain algebra: [X1, Xi] = Xi+1 for i = 2..n-1.
inline LieAlgebra<Rational> m0(int n) {
  LieAlgebra<Rational> g(n, true);
  for (int i = 2; i < n; ++i) g.set_bracket(1, i, axis(n, i + 1));
  return g;
}

/// Chain plus [X2, Xi] = Xi+2 for i = 3..n-2.
inline LieAlgebra<Rational> m2(int n) {
  LieAlgebra<Rational> g = m0(n);
  for (int i = 3; i <= n - 2; ++i) g.set_bracket(2, i, axis(n, i + 2));
  return g;
}

/// Witt-type truncation: [Xi, Xj] = (j - i) Xi+j while i + j <= n.
inline LieAlgebra<Rational> witt(int n) {
  LieAlgebra<Rational> g(n, true);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; i + j <= n; ++j)
      g.set_bracket(i, j, axis(n, i + j, Rational(j - i)));
  return g;
}

/// Chain plus the alternating top-degree pairing, odd dimension 2k+1.
inline LieAlgebra<Rational> m01(int k) {
  int n = 2 * k + 1;
  LieAlgebra<Rational> g = m0(n);
  for (int l = 2; l <= k; ++l)
    g.set_bracket(l, 2 * k + 1 - l,
                  axis(n, n, Rational(l % 2 ? 1 : -1)));
  return g;
}

inline LieAlgebra<Rational> abelian(int n) {
  return LieAlgebra<Rational>(n, false);
}

}  // namespace fixtures
