#pragma once

#include "filiform/radnum.hpp"
#include "filiform/rational.hpp"

namespace filiform {

/// Uniform access to the two exact scalar fields the library is generic
/// over. Everything templated on a scalar S goes through these helpers.
template <class S>
struct scalar_traits;

template <>
struct scalar_traits<Rational> {
  static constexpr const char* name = "rational";
  static Rational from_rational(const Rational& q) { return q; }
  static bool is_zero(const Rational& q) { return q == 0; }
  static Rational invert(const Rational& q) {
    if (q == 0) throw ZeroInverse("inverse of zero rational");
    return Rational(1) / q;
  }
  static double to_double(const Rational& q) { return q.convert_to<double>(); }
};

template <>
struct scalar_traits<RadNum> {
  static constexpr const char* name = "radical";
  static RadNum from_rational(const Rational& q) { return RadNum(q); }
  static bool is_zero(const RadNum& x) { return x.is_zero(); }
  static RadNum invert(const RadNum& x) { return x.inverse(); }
  static double to_double(const RadNum& x) { return x.to_double(); }
};

template <class S>
bool is_zero(const S& x) {
  return scalar_traits<S>::is_zero(x);
}

template <class S>
S invert(const S& x) {
  return scalar_traits<S>::invert(x);
}

template <class S>
S from_rational(const Rational& q) {
  return scalar_traits<S>::from_rational(q);
}

}  // namespace filiform
