#pragma once

#include <string>
#include <utility>
#include <vector>

#include "filiform/errors.hpp"
#include "filiform/inner_product.hpp"
#include "filiform/lie_algebra.hpp"
#include "filiform/matrix.hpp"
#include "filiform/polynomial.hpp"
#include "filiform/radnum.hpp"
#include "filiform/subspace.hpp"
#include "filiform/tgs.hpp"

namespace filiform::m01 {

inline Rational rpow(const Rational& x, int e) {
  if (e < 0) {
    if (is_zero(x)) throw ZeroInverse("zero base with negative exponent");
    return rpow(Rational(1) / x, -e);
  }
  Rational r(1);
  for (int i = 0; i < e; ++i) r *= x;
  return r;
}

/// comb_sum(b, l) = sum_i b_i^l prod_{j != i} (b_i - b_j)^{-1}, which is 1
/// when l = m-1 and 0 for 0 <= l < m-1.
inline Rational comb_sum(const std::vector<Rational>& b, int l) {
  int m = static_cast<int>(b.size());
  if (m < 2) throw Error("need at least two entries");
  if (l < 0 || l >= m) throw IndexOutOfRange("exponent outside 0..m-1");
  for (int i = 0; i < m; ++i) {
    if (is_zero(b[i])) throw Error("entries must be nonzero");
    for (int j = i + 1; j < m; ++j)
      if (b[i] == b[j]) throw DuplicateEntries("entries must be distinct");
  }
  Rational sum(0);
  for (int i = 0; i < m; ++i) {
    Rational term = rpow(b[i], l);
    for (int j = 0; j < m; ++j)
      if (j != i) term /= b[i] - b[j];
    sum += term;
  }
  return sum;
}

struct DiagonalData {
  int k = 0;
  std::vector<Rational> d;   // signed diagonal of S, k-1 entries
  std::vector<Rational> u2;  // squares of the u entries
  Vec<RadNum> u;
};

/// Picks the diagonal S = diag(d) and the vector u. Magnitudes default to
/// 2..k; signs of d are fixed so that each u_i^2 = d_i * prod_{j != i}
/// d_i^2 (d_i^2 - d_j^2)^{-1} comes out positive.
inline DiagonalData choose_S_u(int k,
                               std::vector<Rational> magnitudes = {}) {
  if (k < 3) throw BadDimension("construction needs k >= 3");
  if (magnitudes.empty())
    for (int i = 1; i <= k - 1; ++i) magnitudes.push_back(Rational(i + 1));
  if (magnitudes.size() != static_cast<std::size_t>(k - 1))
    throw DimensionMismatch("need k-1 magnitudes");
  for (std::size_t i = 0; i < magnitudes.size(); ++i) {
    if (sign_of(magnitudes[i]) <= 0)
      throw Error("magnitudes must be positive");
    for (std::size_t j = i + 1; j < magnitudes.size(); ++j)
      if (magnitudes[i] == magnitudes[j])
        throw DuplicateMagnitudes("magnitudes must be pairwise distinct");
  }
  DiagonalData dd;
  dd.k = k;
  for (int i = 0; i < k - 1; ++i) {
    Rational t(1);
    for (int j = 0; j < k - 1; ++j) {
      if (j == i) continue;
      t *= magnitudes[i] * magnitudes[i] /
           (magnitudes[i] * magnitudes[i] - magnitudes[j] * magnitudes[j]);
    }
    Rational d = sign_of(t) > 0 ? magnitudes[i] : -magnitudes[i];
    dd.d.push_back(d);
    dd.u2.push_back(d * t);
    dd.u.push_back(RadNum::sqrt_rational(d * t));
  }
  return dd;
}

namespace detail {

inline Matrix<RadNum> promote_diag(const std::vector<Rational>& d) {
  Vec<RadNum> v;
  for (const auto& x : d) v.push_back(from_rational<RadNum>(x));
  return Matrix<RadNum>::diagonal(v);
}

// T = S(-S + u u^t)
inline Matrix<RadNum> make_T(const DiagonalData& dd) {
  int n = dd.k - 1;
  Matrix<RadNum> t(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      RadNum v = from_rational<RadNum>(dd.d[i]) * dd.u[i] * dd.u[j];
      if (i == j) v = v - from_rational<RadNum>(dd.d[i] * dd.d[i]);
      t.at(i, j) = std::move(v);
    }
  return t;
}

}  // namespace detail

/// q = S^(2-2k) P(S^2) u where P is the truncated square root of
/// chi(t) = det(S^2 - tI) + (-1)^k t^(k-1), a polynomial of degree k-2.
inline Vec<RadNum> build_q(const DiagonalData& dd) {
  int k = dd.k;
  Polynomial chi = Polynomial::constant(Rational(1));
  for (const auto& d : dd.d)
    chi = chi * Polynomial({d * d, Rational(-1)});
  chi = chi + Polynomial::monomial(k - 1, Rational(k % 2 ? -1 : 1));
  if (chi.degree() != k - 2) throw CertificationFailed("chi degree");
  Polynomial p = poly_sqrt_truncate(chi, k - 2);
  Vec<RadNum> q;
  for (int i = 0; i < k - 1; ++i)
    q.push_back(from_rational<RadNum>(rpow(dd.d[i], 2 - 2 * k) *
                                      p.eval(dd.d[i] * dd.d[i])) *
                dd.u[i]);
  return q;
}

/// w = (T^(k-2) S)^t q must be nonzero; p = -w / <w,w> then satisfies
/// <T^(k-2) S p, q> = -1.
inline Vec<RadNum> build_p(const DiagonalData& dd, const Vec<RadNum>& q) {
  Matrix<RadNum> ts =
      detail::make_T(dd).pow(dd.k - 2) * detail::promote_diag(dd.d);
  Vec<RadNum> w = ts.transpose().apply(q);
  if (vec_is_zero(w)) throw DegenerateVector("pairing vector w vanished");
  RadNum norm = vec_dot(w, w);
  Vec<RadNum> p;
  for (const auto& x : w) p.push_back(RadNum(Rational(-1)) * x * norm.inverse());
  return p;
}

struct CertLine {
  std::string name;
  bool ok = false;
};

struct M01Construction {
  int k = 0;
  std::vector<Rational> d;
  Vec<RadNum> u;
  Matrix<RadNum> S, T, N, K;
  Vec<RadNum> q, p, w;
  Vec<RadNum> X2;  // coordinates in the full E-frame
  LieAlgebra<RadNum> algebra{1};
  Subspace<RadNum> h = Subspace<RadNum>::zero(1);
  std::vector<Vec<RadNum>> witness;  // X_1..X_{2k+1}, filled by run_pipeline
  std::vector<CertLine> report;
  bool certified = false;
};

/// Assembles the metric Lie algebra on the orthonormal frame E_1..E_{2k+1}
/// and certifies every identity the construction relies on. Throws
/// CertificationFailed naming the first stage that does not hold.
inline M01Construction assemble(const DiagonalData& dd, const Vec<RadNum>& q,
                                const Vec<RadNum>& p) {
  int k = dd.k, n = 2 * k + 1, m = 2 * k;
  M01Construction c;
  c.k = k;
  c.d = dd.d;
  c.u = dd.u;
  c.q = q;
  c.p = p;
  c.S = detail::promote_diag(dd.d);
  c.T = detail::make_T(dd);

  auto certify = [&](const std::string& name, bool ok) {
    c.report.push_back({name, ok});
    if (!ok) throw CertificationFailed(name);
  };

  // N and K relative to E_2..E_{2k+1}: blocks of sizes k-1, k-1, 1, 1
  c.N = Matrix<RadNum>(m, m);
  c.K = Matrix<RadNum>(m, m);
  for (int i = 0; i < k - 1; ++i) {
    for (int j = 0; j < k - 1; ++j) {
      c.N.at(i, (k - 1) + j) = c.S.at(i, j);
      c.N.at((k - 1) + i, j) =
          c.u[i] * c.u[j] -
          (i == j ? from_rational<RadNum>(dd.d[i]) : RadNum());
    }
    c.N.at(2 * k - 2, i) = p[i];
    c.K.at(i, (k - 1) + i) = from_rational<RadNum>(Rational(1));
    c.K.at((k - 1) + i, i) = from_rational<RadNum>(Rational(-1));
  }
  c.N.at(2 * k - 1, 2 * k - 2) = from_rational<RadNum>(Rational(1));

  certify("K skew-symmetric", c.K.transpose() == RadNum(-1) * c.K);
  certify("KN symmetric", (c.K * c.N).transpose() == c.K * c.N);
  certify("T^(k-1) = 0", c.T.pow(k - 1).is_zero());
  certify("N^(2k-1) != 0", !c.N.pow(2 * k - 1).is_zero());
  certify("N^(2k) = 0", c.N.pow(2 * k).is_zero());

  // the orthogonality and rank conditions on S and u
  RadNum acc;
  for (int i = 0; i < k - 1; ++i)
    acc += from_rational<RadNum>(rpow(dd.d[i], -1)) * dd.u[i] * dd.u[i];
  certify("<S^-1 u, u> = 1", acc == RadNum(Rational(1)));
  for (int l = 2; l <= k - 1; ++l) {
    RadNum s;
    for (int i = 0; i < k - 1; ++i)
      s += from_rational<RadNum>(rpow(dd.d[i], 1 - 2 * l)) * dd.u[i] * dd.u[i];
    certify("<S^(1-2l) u, u> = 0 at l=" + std::to_string(l), s.is_zero());
  }
  {
    std::vector<Vec<RadNum>> cols;
    for (int j = 1; j <= k - 1; ++j) {
      Vec<RadNum> v;
      for (int i = 0; i < k - 1; ++i)
        v.push_back(from_rational<RadNum>(rpow(dd.d[i], 1 - 2 * j)) * dd.u[i]);
      cols.push_back(std::move(v));
    }
    certify("rank(S^-1 u ... S^(3-2k) u) = k-1",
            rank(Matrix<RadNum>::from_cols(cols)) ==
                static_cast<std::size_t>(k - 1));
  }

  // pairing conditions on q and p
  for (int mm = 0; mm <= k - 2; ++mm) {
    RadNum v = vec_dot(c.T.pow(mm).apply(c.S.apply(q)), q);
    bool want_one = (mm == k - 2);
    certify("<T^" + std::to_string(mm) + " S q, q> = " +
                (want_one ? std::string("1") : std::string("0")),
            v == (want_one ? RadNum(Rational(1)) : RadNum()));
  }
  Vec<RadNum> tksp = c.T.pow(k - 2).apply(c.S.apply(p));
  certify("T^(k-2) S p != 0", !vec_is_zero(tksp));
  certify("<T^(k-2) S p, q> = -1", vec_dot(tksp, q) == RadNum(Rational(-1)));
  c.w = (c.T.pow(k - 2) * c.S).transpose().apply(q);

  // the algebra on the full frame
  LieAlgebra<RadNum> alg(n);
  for (int j = 2; j <= n; ++j) {
    Vec<RadNum> col = vec_zero<RadNum>(n);
    for (int r = 0; r < m; ++r) col[r + 1] = c.N.at(r, j - 2);
    alg.set_bracket(1, j, std::move(col));
  }
  for (int a = 2; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b) {
      Vec<RadNum> v = vec_zero<RadNum>(n);
      v[n - 1] = c.K.at(b - 2, a - 2);
      alg.set_bracket(a, b, std::move(v));
    }
  certify("jacobi", alg.jacobi_check().ok);
  bool central = true;
  for (int i = 1; i < n; ++i)
    if (!vec_is_zero(alg.bracket_basis(i, n))) central = false;
  certify("[m, E_(2k+1)] = 0", central);
  c.algebra = std::move(alg);

  // h = complement of span(E_1, E_2k, (0,u,0_(k+1)), (0_k,u,0,0))
  Vec<RadNum> e1 = vec_zero<RadNum>(n), e2k = vec_zero<RadNum>(n);
  e1[0] = from_rational<RadNum>(Rational(1));
  e2k[2 * k - 1] = from_rational<RadNum>(Rational(1));
  Vec<RadNum> a1 = vec_zero<RadNum>(n), a2 = vec_zero<RadNum>(n);
  for (int i = 0; i < k - 1; ++i) {
    a1[1 + i] = dd.u[i];
    a2[k + i] = dd.u[i];
  }
  auto ip = InnerProduct<RadNum>::identity(n);
  Subspace<RadNum> cut = Subspace<RadNum>::span(n, {e1, e2k, a1, a2});
  c.h = orthogonal_complement(cut, ip);
  certify("codim(h) = 4", c.h.dim() == static_cast<std::size_t>(n - 4));
  certify("h is a subalgebra", is_subalgebra(c.algebra, c.h));
  certify("h is totally geodesic",
          is_totally_geodesic(c.algebra, ip, c.h).verdict);

  c.X2 = vec_zero<RadNum>(n);
  for (int i = 0; i < k - 1; ++i) c.X2[k + i] = q[i];
  c.certified = true;
  return c;
}

struct PresentationReport {
  bool ok = true;
  std::string violation;
  std::vector<Vec<RadNum>> witness;  // X_1 .. X_{2k+1} in the E-frame
};

/// Builds X_1 = E_1, X_2 from q, X_i = ad(E_1)^(i-2) X_2 and checks the full
/// m_{0,1}(2k+1) relation table on them.
inline PresentationReport verify_m01_presentation(const M01Construction& c) {
  int k = c.k, n = 2 * k + 1;
  PresentationReport rep;
  auto fail = [&](std::string why) {
    rep.ok = false;
    rep.violation = std::move(why);
    return rep;
  };

  Vec<RadNum> x2 = vec_zero<RadNum>(n);
  for (int i = 0; i < k - 1; ++i) x2[k + i] = c.q[i];
  Vec<RadNum> e1 = vec_zero<RadNum>(n);
  e1[0] = from_rational<RadNum>(Rational(1));

  rep.witness.push_back(e1);
  rep.witness.push_back(x2);
  for (int i = 3; i <= n; ++i)
    rep.witness.push_back(c.algebra.bracket(e1, rep.witness.back()));

  for (int i = 1; i <= n; ++i)
    if (vec_is_zero(rep.witness[i - 1]))
      return fail("X_" + std::to_string(i) + " = 0");
  if (rank(Matrix<RadNum>::from_cols(rep.witness)) !=
      static_cast<std::size_t>(n))
    return fail("witness basis is linearly dependent");

  Vec<RadNum> top = vec_zero<RadNum>(n);
  top[n - 1] = from_rational<RadNum>(Rational(-1));
  if (rep.witness[n - 1] != top) return fail("X_(2k+1) != -E_(2k+1)");

  for (int i = 2; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      Vec<RadNum> got =
          c.algebra.bracket(rep.witness[i - 1], rep.witness[j - 1]);
      Vec<RadNum> want = vec_zero<RadNum>(n);
      if (i + j == n)
        want = vec_scale(RadNum(i % 2 ? 1 : -1), rep.witness[n - 1]);
      if (got != want)
        return fail("[X_" + std::to_string(i) + ", X_" + std::to_string(j) +
                    "] relation fails");
    }
  return rep;
}

/// The whole construction for one k: choose S and u, build q and p,
/// assemble and certify, then verify the presentation.
inline M01Construction run_pipeline(int k,
                                    std::vector<Rational> magnitudes = {}) {
  DiagonalData dd = choose_S_u(k, std::move(magnitudes));
  Vec<RadNum> q = build_q(dd);
  Vec<RadNum> p = build_p(dd, q);
  M01Construction c = assemble(dd, q, p);
  PresentationReport pres = verify_m01_presentation(c);
  if (!pres.ok) throw CertificationFailed("presentation: " + pres.violation);
  c.report.push_back({"presentation relations", true});
  c.witness = std::move(pres.witness);
  return c;
}

}  // namespace filiform::m01
