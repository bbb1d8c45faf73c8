#pragma once

#include <cmath>
#include <cstdlib>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "filiform/rational.hpp"

namespace filiform {

/// Element of the real multi-quadratic extension ring: a finite sum
/// sum_s q_s * sqrt(s) over squarefree integers s >= 1 with q_s rational.
///
/// The representation is canonical (radicands squarefree, coefficients
/// nonzero, sorted by radicand), so equality is map equality. The value with
/// no terms is zero; the radicand 1 carries the rational part.
class RadNum {
 public:
  RadNum() = default;
  RadNum(const Rational& r) { add_term(1, r); }
  RadNum(long v) { add_term(1, Rational(v)); }
  RadNum(int v) { add_term(1, Rational(v)); }

  /// coeff * sqrt(radicand) for any radicand >= 1 (canonicalized here).
  static RadNum radical(const Int& radicand, const Rational& coeff) {
    RadNum x;
    x.add_term(radicand, coeff);
    return x;
  }

  /// sqrt(p/q) = (1/q) sqrt(pq), with the square part extracted.
  static RadNum sqrt_rational(const Rational& r) {
    if (r < 0)
      throw NegativeRadicand("sqrt of negative rational " + to_string(r));
    if (r == 0) return RadNum();
    return radical(numerator(r) * denominator(r),
                   Rational(1, denominator(r)));
  }

  const std::map<Int, Rational>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }

  bool is_rational() const {
    return terms_.empty() ||
           (terms_.size() == 1 && terms_.begin()->first == 1);
  }

  /// Rational part (the radicand-1 coefficient).
  Rational rational_part() const {
    auto it = terms_.find(Int(1));
    return it == terms_.end() ? Rational(0) : it->second;
  }

  /// The value as a Rational; requires is_rational().
  Rational as_rational() const {
    if (!is_rational())
      throw Error("RadNum " + str() + " is not rational");
    return rational_part();
  }

  RadNum& operator+=(const RadNum& o) {
    for (const auto& [s, c] : o.terms_) add_canonical(s, c);
    return *this;
  }
  RadNum& operator-=(const RadNum& o) {
    for (const auto& [s, c] : o.terms_) add_canonical(s, -c);
    return *this;
  }
  friend RadNum operator+(RadNum a, const RadNum& b) { return a += b; }
  friend RadNum operator-(RadNum a, const RadNum& b) { return a -= b; }
  friend RadNum operator-(const RadNum& a) {
    RadNum r;
    for (const auto& [s, c] : a.terms_) r.terms_.emplace(s, -c);
    return r;
  }

  /// sqrt(s) * sqrt(t) = g * sqrt((s/g)(t/g)) with g = gcd(s, t); both
  /// factors stay squarefree, so no re-extraction is needed.
  friend RadNum operator*(const RadNum& a, const RadNum& b) {
    RadNum r;
    for (const auto& [s, c] : a.terms_)
      for (const auto& [t, d] : b.terms_) {
        Int g = gcd(s, t);
        r.add_canonical((s / g) * (t / g), c * d * Rational(g));
      }
    return r;
  }
  RadNum& operator*=(const RadNum& o) { return *this = *this * o; }

  /// Multiplicative inverse via the product of all nontrivial sign-flip
  /// conjugates: a * prod(conjugates) is rational, so 1/a is
  /// prod(conjugates) divided by that rational.
  RadNum inverse() const {
    if (is_zero()) throw ZeroInverse("inverse of zero RadNum");
    if (is_rational()) return RadNum(Rational(1) / rational_part());
    std::vector<Int> primes = prime_support();
    std::size_t g = primes.size();
    RadNum prod(Rational(1));
    for (std::size_t mask = 1; mask < (std::size_t(1) << g); ++mask)
      prod *= conjugate(primes, mask);
    RadNum full = *this * prod;
    // The full conjugate product is a field norm, hence rational and nonzero.
    Rational n = full.as_rational();
    RadNum r;
    for (const auto& [s, c] : prod.terms_) r.terms_.emplace(s, c / n);
    return r;
  }

  friend RadNum operator/(const RadNum& a, const RadNum& b) {
    return a * b.inverse();
  }
  RadNum& operator/=(const RadNum& o) { return *this = *this / o; }

  friend bool operator==(const RadNum& a, const RadNum& b) {
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const RadNum& a, const RadNum& b) {
    return !(a == b);
  }

  /// Exact sign (-1, 0, +1), no floating point involved.
  int sign() const { return sign_of_terms(terms_); }

  double to_double() const {
    double v = 0;
    for (const auto& [s, c] : terms_)
      v += c.convert_to<double>() * std::sqrt(s.convert_to<double>());
    return v;
  }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [s, c] : terms_) {
      if (!out.empty()) out += " + ";
      out += to_string(c);
      if (s != 1) out += "*sqrt(" + s.str() + ")";
    }
    return out;
  }

 private:
  std::map<Int, Rational> terms_;

  void add_term(const Int& radicand_raw, const Rational& c) {
    if (c == 0) return;
    auto [f, s] = squarefree_extract(radicand_raw);
    add_canonical(s, c * Rational(f));
  }

  // radicand already squarefree
  void add_canonical(const Int& s, const Rational& c) {
    if (c == 0) return;
    auto it = terms_.find(s);
    if (it == terms_.end()) {
      terms_.emplace(s, c);
    } else {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  std::vector<Int> prime_support() const {
    std::set<Int> primes;
    for (const auto& [s, c] : terms_)
      for (const Int& p : factor_squarefree(s)) primes.insert(p);
    return {primes.begin(), primes.end()};
  }

  /// Conjugate flipping the sign of sqrt(p) for each prime p selected by
  /// mask; a term q*sqrt(s) flips once per selected prime dividing s.
  RadNum conjugate(const std::vector<Int>& primes, std::size_t mask) const {
    RadNum r;
    for (const auto& [s, c] : terms_) {
      int flips = 0;
      for (std::size_t i = 0; i < primes.size(); ++i)
        if ((mask >> i) & 1 && s % primes[i] == 0) ++flips;
      r.terms_.emplace(s, (flips % 2) ? -c : c);
    }
    return r;
  }

  /// sign(A + B*sqrt(P)) where P is the largest prime in the support and
  /// A, B live over the remaining primes: recurse on A^2 - P*B^2 when the
  /// two halves disagree in sign.
  static int sign_of_terms(const std::map<Int, Rational>& terms) {
    if (terms.empty()) return 0;
    if (terms.size() == 1) return terms.begin()->second.sign();
    Int p = 1;
    for (const auto& [s, c] : terms)
      for (const Int& q : factor_squarefree(s))
        if (q > p) p = q;
    RadNum a, b;
    for (const auto& [s, c] : terms) {
      if (s % p == 0)
        b.add_canonical(s / p, c);
      else
        a.add_canonical(s, c);
    }
    int sa = sign_of_terms(a.terms_), sb = sign_of_terms(b.terms_);
    if (sa == 0) return sb;
    if (sb == 0) return sa;
    if (sa == sb) return sa;
    RadNum d = a * a - RadNum(Rational(p)) * b * b;
    return sa * sign_of_terms(d.terms_);
  }
};

inline int sign_of(const RadNum& x) { return x.sign(); }
inline std::string to_string(const RadNum& x) { return x.str(); }

}  // namespace filiform
