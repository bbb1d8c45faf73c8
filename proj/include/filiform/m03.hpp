#pragma once

// The K_1, K_2, K_3 form matrices attached to m_{0,3}(2k+3), the closed-form
// kernel polynomial of their pencil combinations, and the rank / kernel-span
// assertions used by the codimension bound for that family.

#include <array>
#include <string>
#include <vector>

#include "filiform/catalog.hpp"
#include "filiform/errors.hpp"
#include "filiform/matrix.hpp"
#include "filiform/polynomial.hpp"
#include "filiform/rational.hpp"
#include "filiform/subspace.hpp"

namespace filiform::m03 {

struct KTriple {
  int k = 0;
  Matrix<Rational> K1, K2, K3;
};

/// Entries, 1-based in l and m over 1..2k-1:
///   (K1)_lm = (-1)^l     delta_{l+m,2k-1}
///   (K2)_lm = (-1)^l     delta_{l+m,2k}   (k-l)
///   (K3)_lm = (-1)^(l+1) delta_{l+m,2k+1} (l-1)(m-1)/2
/// These encode [X_i, X_j] = sum_a (Ka)_{i-1,j-1} X_{2k+a} in m_{0,3}(2k+3)
/// for i, j = 2..2k.
inline KTriple build_ktriple(int k) {
  if (k < 3) throw BadK("need k >= 3");
  int n = 2 * k - 1;
  KTriple kt{k, Matrix<Rational>(n, n), Matrix<Rational>(n, n),
             Matrix<Rational>(n, n)};
  for (int l = 1; l <= n; ++l)
    for (int m = 1; m <= n; ++m) {
      Rational sgn(l % 2 ? -1 : 1);
      if (l + m == 2 * k - 1) kt.K1.at(l - 1, m - 1) = sgn;
      if (l + m == 2 * k) kt.K2.at(l - 1, m - 1) = sgn * (k - l);
      if (l + m == 2 * k + 1)
        kt.K3.at(l - 1, m - 1) = -sgn * Rational((l - 1) * (m - 1), 2);
    }
  for (const auto* ka : {&kt.K1, &kt.K2, &kt.K3})
    if (!(ka->transpose() == Rational(-1) * *ka))
      throw BadK("form matrix is not skew-symmetric");
  return kt;
}

inline Matrix<Rational> combination(const KTriple& kt, const Rational& a,
                                    const Rational& b, const Rational& c) {
  if (is_zero(a) && is_zero(b) && is_zero(c))
    throw ZeroCombination("a = b = c = 0");
  return a * kt.K1 + b * kt.K2 + c * kt.K3;
}

/// Closed form for ker(a K1 + b K2 + c K3): the coefficients of
/// (a - b t + c t^2/2)^(k-1) read off as x_{2k-1-j} = j! [t^j].
inline Vec<Rational> kernel_poly_formula(int k, const Rational& a,
                                         const Rational& b,
                                         const Rational& c) {
  if (k < 3) throw BadK("need k >= 3");
  if (is_zero(a) && is_zero(b) && is_zero(c))
    throw ZeroCombination("a = b = c = 0");
  Polynomial base({a, -b, c / 2});
  Polynomial p = Polynomial::constant(Rational(1));
  for (int i = 0; i < k - 1; ++i) p = p * base;
  Vec<Rational> x = vec_zero<Rational>(2 * k - 1);
  Rational fact(1);
  for (int j = 0; j <= 2 * k - 2; ++j) {
    if (j > 0) fact *= j;
    x[2 * k - 2 - j] = fact * p.coeff(j);
  }
  return x;
}

struct RankReport {
  bool ok = false;
  std::size_t rank = 0;
};

/// rank(a K1 + b K2 + c K3) = 2k-2 for every nonzero combination.
inline RankReport rank_assertion(int k, const Rational& a, const Rational& b,
                                 const Rational& c) {
  auto kt = build_ktriple(k);
  std::size_t r = rank(combination(kt, a, b, c));
  return {r == static_cast<std::size_t>(2 * k - 2), r};
}

/// Dimension of the span of the kernel lines over the pencil n1 + lambda n2,
/// lambda running over `samples` plus the point at infinity (n2 itself).
/// Empty `samples` defaults to 0..2k-2, enough to saturate the span since the
/// kernel coordinates are polynomial in lambda of degree <= 2k-2.  Also checks
/// that every pair of sampled kernel lines meets trivially.
inline int kernel_span_dimension(
    int k, std::vector<Rational> samples = {},
    std::array<Rational, 3> n1 = {Rational(1), Rational(0), Rational(0)},
    std::array<Rational, 3> n2 = {Rational(0), Rational(0), Rational(1)}) {
  bool proportional = true;
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      if (!is_zero(Rational(n1[i] * n2[j] - n1[j] * n2[i])))
        proportional = false;
  if (proportional) throw Error("pencil generators are proportional");
  if (samples.empty())
    for (int j = 0; j <= 2 * k - 2; ++j) samples.push_back(Rational(j));

  std::vector<Vec<Rational>> kernels;
  for (const auto& lam : samples)
    kernels.push_back(kernel_poly_formula(k, n1[0] + lam * n2[0],
                                          n1[1] + lam * n2[1],
                                          n1[2] + lam * n2[2]));
  kernels.push_back(kernel_poly_formula(k, n2[0], n2[1], n2[2]));

  for (std::size_t i = 0; i < kernels.size(); ++i)
    for (std::size_t j = i + 1; j < kernels.size(); ++j)
      if (rank(Matrix<Rational>::from_rows({kernels[i], kernels[j]})) != 2)
        throw CertificationFailed("pairwise kernel intersection");

  return static_cast<int>(rank(Matrix<Rational>::from_rows(kernels)));
}

/// J_N for N = a X_{2k+1} + b X_{2k+2} + c X_{2k+3} in m_{0,3}(2k+3) with the
/// identity inner product, relative to the basis X_2..X_2k:
/// (J_N)_lm = <N, [X_{l+1}, X_{m+1}]>.  Asserts rank congruence with the
/// matching K-combination before returning.
inline Matrix<Rational> build_jn(int k, const Rational& a, const Rational& b,
                                 const Rational& c) {
  auto kt = build_ktriple(k);
  auto combo = combination(kt, a, b, c);
  auto g = catalog::build({catalog::Family::m03, 2 * k + 3, std::nullopt});
  int n = 2 * k - 1;
  Matrix<Rational> j(n, n);
  for (int l = 1; l <= n; ++l)
    for (int m = 1; m <= n; ++m) {
      Vec<Rational> v = g.bracket_basis(l + 1, m + 1);
      j.at(l - 1, m - 1) =
          a * v[2 * k] + b * v[2 * k + 1] + c * v[2 * k + 2];
    }
  if (rank(j) != rank(combo))
    throw CertificationFailed("J_N rank congruence");
  return j;
}

}  // namespace filiform::m03
