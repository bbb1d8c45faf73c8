#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "filiform/errors.hpp"
#include "filiform/lie_algebra.hpp"
#include "filiform/matrix.hpp"
#include "filiform/rational.hpp"

namespace filiform::catalog {

enum class Family { m0, m2, V, m01, m02, m03, g7, g8, g9, g10, g11 };

inline const char* family_name(Family f) {
  switch (f) {
    case Family::m0: return "m0";
    case Family::m2: return "m2";
    case Family::V: return "V";
    case Family::m01: return "m01";
    case Family::m02: return "m02";
    case Family::m03: return "m03";
    case Family::g7: return "g7";
    case Family::g8: return "g8";
    case Family::g9: return "g9";
    case Family::g10: return "g10";
    case Family::g11: return "g11";
  }
  return "?";
}

/// Accepts the enum spellings plus the shorthand "g" resolved through dim.
inline std::optional<Family> family_from_string(const std::string& s, int dim) {
  if (s == "m0") return Family::m0;
  if (s == "m2") return Family::m2;
  if (s == "V" || s == "v") return Family::V;
  if (s == "m01") return Family::m01;
  if (s == "m02") return Family::m02;
  if (s == "m03") return Family::m03;
  if (s == "g7") return Family::g7;
  if (s == "g8") return Family::g8;
  if (s == "g9") return Family::g9;
  if (s == "g10") return Family::g10;
  if (s == "g11") return Family::g11;
  if (s == "g") {
    switch (dim) {
      case 7: return Family::g7;
      case 8: return Family::g8;
      case 9: return Family::g9;
      case 10: return Family::g10;
      case 11: return Family::g11;
      default: return std::nullopt;
    }
  }
  return std::nullopt;
}

struct FamilySpec {
  Family family;
  int dim = 0;
  std::optional<Rational> alpha;
};

namespace detail {

inline Vec<Rational> unit(int n, int i, Rational c = Rational(1)) {
  Vec<Rational> v(n, Rational(0));
  v[i - 1] = std::move(c);
  return v;
}

inline void put_chain(LieAlgebra<Rational>& g) {
  for (int i = 2; i < g.dim(); ++i) g.set_bracket(1, i, unit(g.dim(), i + 1));
}

inline Rational require_alpha(const FamilySpec& spec) {
  if (!spec.alpha)
    throw RestrictionViolated(std::string(family_name(spec.family)) +
                              " requires a rational alpha parameter");
  return *spec.alpha;
}

inline void require_dim(bool ok, const std::string& what) {
  if (!ok) throw BadDimension(what);
}

// Restrictions that make a table denominator vanish; enforced on every path.
inline void hard_restrictions(Family f, const Rational& a) {
  auto bad = [&](long num, long den, const char* text) {
    if (a == Rational(num) / den)
      throw RestrictionViolated(std::string(family_name(f)) + " requires " +
                                text);
  };
  if (f == Family::g9 || f == Family::g10 || f == Family::g11)
    bad(-5, 2, "alpha != -5/2");
  if (f == Family::g11) {
    bad(-1, 1, "alpha != -1");
    bad(-3, 1, "alpha != -3");
  }
}

// The remaining table restrictions; these exclude duplicates of other
// families, the structure constants themselves stay finite.
inline void soft_restrictions(Family f, const Rational& a) {
  if ((f == Family::g7 || f == Family::g8 || f == Family::g9) &&
      a == Rational(-2))
    throw RestrictionViolated(std::string(family_name(f)) +
                              " requires alpha != -2");
}

inline LieAlgebra<Rational> build_g(Family f, int n, const Rational& a) {
  LieAlgebra<Rational> g(n, true);
  put_chain(g);
  auto set = [&](int i, int j, const Rational& c) {
    g.set_bracket(i, j, unit(n, i + j, c));
  };
  set(2, 3, 2 + a);
  set(2, 4, 2 + a);
  set(2, 5, 1 + a);
  set(3, 4, Rational(1));
  if (f == Family::g7) return g;
  set(2, 6, a);
  set(3, 5, Rational(1));
  if (f == Family::g8) return g;
  Rational den = 2 * a + 5;
  set(2, 7, (2 * a * a + 3 * a - 2) / den);
  set(3, 6, (2 * a + 2) / den);
  set(4, 5, Rational(3) / den);
  if (f == Family::g9) return g;
  set(2, 8, (2 * a * a + a - 1) / den);
  set(3, 7, (2 * a - 1) / den);
  set(4, 6, Rational(3) / den);
  if (f == Family::g10) return g;
  Rational e = 2 * (a * a + 4 * a + 3);
  set(2, 9, (2 * a * a * a + 2 * a * a + 3) / e);
  set(3, 8, (4 * a * a * a + 8 * a * a - 8 * a - 21) / (e * den));
  set(4, 7, 3 * (2 * a * a + 4 * a + 5) / (e * den));
  set(5, 6, 3 * (4 * a + 1) / (e * den));
  return g;
}

// Relations shared by the m01/m02/m03 towers, one graded level each.
inline void put_level_2k1(LieAlgebra<Rational>& g, int k) {
  int n = g.dim();
  for (int l = 2; l <= k; ++l)
    g.set_bracket(l, 2 * k + 1 - l,
                  unit(n, 2 * k + 1, Rational(l % 2 ? 1 : -1)));
}

inline void put_level_2k2(LieAlgebra<Rational>& g, int k) {
  int n = g.dim();
  for (int j = 2; j <= k; ++j)
    g.set_bracket(j, 2 * k + 2 - j,
                  unit(n, 2 * k + 2, Rational(j % 2 ? 1 : -1) * (k - j + 1)));
}

inline void put_level_2k3(LieAlgebra<Rational>& g, int k) {
  int n = g.dim();
  for (int m = 3; m <= k + 1; ++m) {
    long c = static_cast<long>(m - 2) * k -
             static_cast<long>(m - 2) * (m - 1) / 2;
    g.set_bracket(m, 2 * k + 3 - m,
                  unit(n, 2 * k + 3, Rational(m % 2 ? -1 : 1) * c));
  }
}

}  // namespace detail

/// Constructs the algebra even for parameter values excluded only because
/// they duplicate another family (g7/g8/g9 at alpha = -2). Denominator
/// restrictions stay fatal.
inline LieAlgebra<Rational> build_unchecked(
    const FamilySpec& spec, std::vector<std::string>* warnings = nullptr) {
  using namespace detail;
  int n = spec.dim;
  switch (spec.family) {
    case Family::m0: {
      require_dim(n >= 3, "m0 requires dim >= 3");
      LieAlgebra<Rational> g(n, true);
      put_chain(g);
      return g;
    }
    case Family::m2: {
      require_dim(n >= 5, "m2 requires dim >= 5");
      LieAlgebra<Rational> g(n, true);
      put_chain(g);
      for (int i = 3; i <= n - 2; ++i)
        g.set_bracket(2, i, unit(n, i + 2));
      return g;
    }
    case Family::V: {
      require_dim(n >= 3, "V requires dim >= 3");
      if (n < 12 && warnings)
        warnings->push_back("V with dim " + std::to_string(n) +
                            " duplicates another catalog family");
      LieAlgebra<Rational> g(n, true);
      for (int i = 1; i < n; ++i)
        for (int j = i + 1; i + j <= n; ++j)
          g.set_bracket(i, j, unit(n, i + j, Rational(j - i)));
      return g;
    }
    case Family::m01: {
      require_dim(n >= 7 && n % 2 == 1, "m01 requires dim = 2k+1, k >= 3");
      int k = (n - 1) / 2;
      LieAlgebra<Rational> g(n, true);
      put_chain(g);
      put_level_2k1(g, k);
      return g;
    }
    case Family::m02: {
      require_dim(n >= 8 && n % 2 == 0, "m02 requires dim = 2k+2, k >= 3");
      int k = (n - 2) / 2;
      LieAlgebra<Rational> g(n, true);
      put_chain(g);
      put_level_2k1(g, k);
      put_level_2k2(g, k);
      return g;
    }
    case Family::m03: {
      require_dim(n >= 9 && n % 2 == 1, "m03 requires dim = 2k+3, k >= 3");
      int k = (n - 3) / 2;
      LieAlgebra<Rational> g(n, true);
      put_chain(g);
      put_level_2k1(g, k);
      put_level_2k2(g, k);
      put_level_2k3(g, k);
      return g;
    }
    case Family::g7:
    case Family::g8:
    case Family::g9:
    case Family::g10:
    case Family::g11: {
      int want = 7 + (static_cast<int>(spec.family) -
                      static_cast<int>(Family::g7));
      require_dim(n == want, std::string(family_name(spec.family)) +
                                 " has dimension " + std::to_string(want));
      Rational a = require_alpha(spec);
      hard_restrictions(spec.family, a);
      return build_g(spec.family, n, a);
    }
  }
  throw Error("unknown family");
}

/// Table constructor enforcing every listed parameter restriction.
inline LieAlgebra<Rational> build(const FamilySpec& spec,
                                  std::vector<std::string>* warnings = nullptr) {
  if (spec.alpha) detail::soft_restrictions(spec.family, *spec.alpha);
  return build_unchecked(spec, warnings);
}

struct ClassifyReport {
  bool o1 = false;
  bool o2 = false;
};

/// Syntactic membership test in the stored basis: O1 requires every
/// [X_i, X_{n-i}] to be a nonzero multiple of X_n, O2 additionally every
/// [X_2, X_i] a nonzero multiple of X_{i+2}.
inline ClassifyReport classify_families(const LieAlgebra<Rational>& g) {
  if (!g.graded()) throw NotGraded("classification requires a graded algebra");
  int n = g.dim();
  auto is_multiple = [&](const Vec<Rational>& v, int t) {
    for (int r = 1; r <= n; ++r)
      if (r != t && !is_zero(v[r - 1])) return false;
    return !is_zero(v[t - 1]);
  };
  for (int i = 2; i < n; ++i)
    if (!is_multiple(g.bracket_basis(1, i), i + 1))
      throw NotGraded("stored basis is not a chain basis");
  ClassifyReport rep;
  rep.o1 = true;
  for (int i = 2; i <= (n - 1) / 2; ++i)
    if (!is_multiple(g.bracket_basis(i, n - i), n)) {
      rep.o1 = false;
      break;
    }
  rep.o2 = rep.o1;
  if (rep.o2)
    for (int i = 3; i <= n - 2; ++i)
      if (!is_multiple(g.bracket_basis(2, i), i + 2)) {
        rep.o2 = false;
        break;
      }
  return rep;
}

struct IsoReport {
  bool ok = true;
  int i = 0;
  int j = 0;
  std::string note;
};

/// Checks that x -> map*x is an isomorphism src -> dst: invertibility plus
/// map([X_i,X_j]) = [map X_i, map X_j] on every basis pair.
template <class S>
IsoReport iso_witness_check(const LieAlgebra<S>& src, const LieAlgebra<S>& dst,
                            const Matrix<S>& map) {
  if (src.dim() != dst.dim())
    throw DimensionMismatch("source and target dimensions differ");
  std::size_t n = static_cast<std::size_t>(src.dim());
  if (map.rows() != n || map.cols() != n)
    throw DimensionMismatch("witness matrix shape");
  if (rank(map) != n) return {false, 0, 0, "witness matrix is singular"};
  for (int i = 1; i <= src.dim(); ++i)
    for (int j = i + 1; j <= src.dim(); ++j) {
      Vec<S> lhs = map.apply(src.bracket_basis(i, j));
      Vec<S> rhs = dst.bracket(map.col(i - 1), map.col(j - 1));
      if (lhs != rhs) return {false, i, j, "bracket image mismatch"};
    }
  return {};
}

/// Searches for a diagonal isomorphism witness determined by the images of
/// the two generators. The chain forces c_{i+1} = c_1 c_i tau_i / sigma_i
/// (sigma, tau the chain coefficients of src, dst); every non-chain bracket
/// then pins the same value of c_2, taking c_1 = 1 without loss.
inline std::optional<Matrix<Rational>> find_diagonal_witness(
    const LieAlgebra<Rational>& src, const LieAlgebra<Rational>& dst) {
  int n = src.dim();
  if (n != dst.dim())
    throw DimensionMismatch("source and target dimensions differ");
  auto graded_coeff = [&](const LieAlgebra<Rational>& g, int i,
                          int j) -> std::optional<Rational> {
    Vec<Rational> v = g.bracket_basis(i, j);
    if (i + j > n) return vec_is_zero(v) ? std::optional<Rational>(Rational(0))
                                         : std::nullopt;
    for (int r = 1; r <= n; ++r)
      if (r != i + j && !is_zero(v[r - 1])) return std::nullopt;
    return v[i + j - 1];
  };

  // ratio[i] = R_i with c_i = c_2 R_i for i >= 2, R_2 = 1
  std::vector<Rational> ratio(n + 1, Rational(0));
  ratio[2] = 1;
  for (int i = 2; i < n; ++i) {
    auto s = graded_coeff(src, 1, i), t = graded_coeff(dst, 1, i);
    if (!s || !t || is_zero(*s) || is_zero(*t)) return std::nullopt;
    ratio[i + 1] = ratio[i] * *t / *s;
  }

  std::optional<Rational> b;
  for (int i = 2; i <= n; ++i)
    for (int j = i + 1; i + j <= n; ++j) {
      auto s = graded_coeff(src, i, j), t = graded_coeff(dst, i, j);
      if (!s || !t) return std::nullopt;
      if (is_zero(*s) && is_zero(*t)) continue;
      if (is_zero(*s) || is_zero(*t)) return std::nullopt;
      Rational cand = *s * ratio[i + j] / (*t * ratio[i] * ratio[j]);
      if (!b)
        b = cand;
      else if (*b != cand)
        return std::nullopt;
    }
  if (!b) b = Rational(1);

  Vec<Rational> diag(n);
  diag[0] = 1;
  for (int i = 2; i <= n; ++i) diag[i - 1] = *b * ratio[i];
  Matrix<Rational> m = Matrix<Rational>::diagonal(diag);
  if (!iso_witness_check(src, dst, m).ok) return std::nullopt;
  return m;
}

/// The diagonal witness g_{n,8} -> V_n: X_1 -> X_1, X_k -> (k-2)! * 60 * X_k.
inline Matrix<Rational> gn8_to_vn_witness(int n) {
  Vec<Rational> diag(n);
  diag[0] = 1;
  Rational f = 60;
  for (int k = 2; k <= n; ++k) {
    diag[k - 1] = f;
    f *= k - 1;
  }
  return Matrix<Rational>::diagonal(diag);
}

/// Drops the top coordinate X_n and every bracket component in it.
template <class S>
LieAlgebra<S> truncate_top(const LieAlgebra<S>& g) {
  int n = g.dim();
  if (n < 2) throw BadDimension("nothing below the top coordinate");
  LieAlgebra<S> q(n - 1, g.graded());
  for (const auto& [key, v] : g.structure()) {
    if (key.second >= n) continue;
    Vec<S> w(v.begin(), v.end() - 1);
    q.set_bracket(key.first, key.second, std::move(w));
  }
  return q;
}

struct QuotientMatchReport {
  bool ok = true;
  int i = 0;
  int j = 0;
};

/// Builds the bigger algebra, truncates its top coordinate and compares
/// structure constants exactly with the smaller one.
inline QuotientMatchReport quotient_matches_family(
    const FamilySpec& big, const FamilySpec& small,
    std::vector<std::string>* warnings = nullptr) {
  if (big.dim != small.dim + 1)
    throw DimensionMismatch("quotient drops exactly one dimension");
  LieAlgebra<Rational> t = truncate_top(build(big, warnings));
  LieAlgebra<Rational> s = build(small, warnings);
  if (t.structure() == s.structure()) return {};
  for (int i = 1; i <= s.dim(); ++i)
    for (int j = i + 1; j <= s.dim(); ++j)
      if (t.bracket_basis(i, j) != s.bracket_basis(i, j)) return {false, i, j};
  return {false, 0, 0};
}

}  // namespace filiform::catalog
