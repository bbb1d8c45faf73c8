#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "filiform/errors.hpp"

namespace filiform {

using Int = boost::multiprecision::cpp_int;

/// Arbitrary-precision exact fraction. The backing type keeps the canonical
/// form invariants: gcd(num, den) = 1, den > 0, zero is 0/1.
using Rational = boost::multiprecision::cpp_rational;

inline Int num(const Rational& q) { return numerator(q); }
inline Int den(const Rational& q) { return denominator(q); }

inline int sign_of(const Rational& q) { return q.sign(); }

/// Serializes as "p/q", or "p" when the denominator is 1.
inline std::string to_string(const Rational& q) {
  if (denominator(q) == 1) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

/// Parses "p", "-p", or "p/q" with q > 0. Whitespace is not tolerated.
inline Rational parse_rational(const std::string& s) {
  auto valid_int = [](const std::string& t, bool allow_sign) {
    if (t.empty()) return false;
    std::size_t i = 0;
    if (allow_sign && (t[0] == '-' || t[0] == '+')) i = 1;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (t[i] < '0' || t[i] > '9') return false;
    return true;
  };
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) {
      if (!valid_int(s, true)) throw ParseError("bad rational: '" + s + "'");
      return Rational(Int(s));
    }
    std::string p = s.substr(0, slash), q = s.substr(slash + 1);
    if (!valid_int(p, true) || !valid_int(q, false))
      throw ParseError("bad rational: '" + s + "'");
    Int qi(q);
    if (qi == 0) throw ParseError("zero denominator: '" + s + "'");
    return Rational(Int(p), qi);
  } catch (const std::exception& e) {
    throw ParseError(std::string("bad rational: '") + s + "': " + e.what());
  }
}

/// Integer square root test: returns the root if n is a perfect square.
inline std::optional<Int> perfect_square_root(const Int& n) {
  if (n < 0) return std::nullopt;
  Int r = sqrt(n);
  if (r * r == n) return r;
  return std::nullopt;
}

/// Exact square root of a nonnegative rational, when one exists in Q.
inline std::optional<Rational> exact_rational_sqrt(const Rational& q) {
  if (q < 0) return std::nullopt;
  auto p = perfect_square_root(numerator(q));
  if (!p) return std::nullopt;
  auto d = perfect_square_root(denominator(q));
  if (!d) return std::nullopt;
  return Rational(*p, *d);
}

inline constexpr long kSquarefreeBound = 1000000;

/// Writes n >= 1 as f^2 * s with s squarefree; returns (f, s).
///
/// Trial division up to `bound`. A leftover cofactor that cannot be certified
/// squarefree (possible only when it is >= bound^3 and not a perfect square)
/// raises SquarefreeBoundExceeded rather than guessing.
inline std::pair<Int, Int> squarefree_extract(const Int& n,
                                              long bound = kSquarefreeBound) {
  if (n < 1) throw NegativeRadicand("squarefree_extract requires n >= 1");
  Int f = 1, s = 1, r = n;
  for (Int d = 2; d <= bound && d * d <= r; ++d) {
    if (r % d != 0) continue;
    int e = 0;
    while (r % d == 0) {
      r /= d;
      ++e;
    }
    for (int i = 0; i < e / 2; ++i) f *= d;
    if (e % 2) s *= d;
  }
  if (r > 1) {
    Int b(bound);
    if (r <= b * b) {
      s *= r;  // no factor <= bound and r <= bound^2: r is prime
    } else if (auto root = perfect_square_root(r)) {
      f *= *root;
    } else if (r < b * b * b) {
      s *= r;  // p or pq with p, q > bound: squarefree either way
    } else {
      throw SquarefreeBoundExceeded("cannot certify squarefree part of " +
                                    n.str());
    }
  }
  return {f, s};
}

/// Prime factorization of a squarefree integer s >= 1, ascending.
/// A leftover above bound must be a certified prime (< bound^2) or we fail.
inline std::vector<Int> factor_squarefree(const Int& s,
                                          long bound = kSquarefreeBound) {
  std::vector<Int> primes;
  Int r = s;
  for (Int d = 2; d <= bound && d * d <= r; ++d) {
    if (r % d == 0) {
      primes.push_back(d);
      r /= d;
    }
  }
  if (r > 1) {
    Int b(bound);
    if (r > b * b)  // possibly a composite pq with p, q > bound
      throw SquarefreeBoundExceeded("cannot certify primality of " + r.str());
    primes.push_back(r);
  }
  return primes;
}

}  // namespace filiform
