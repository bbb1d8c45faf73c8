#pragma once

#include <random>
#include <vector>

#include "filiform/radnum.hpp"
#include "filiform/rational.hpp"

namespace testsupport {

using filiform::Int;
using filiform::RadNum;
using filiform::Rational;

/// Deterministic RNG so every test run sees the same sample set.
inline std::mt19937& rng() {
  static std::mt19937 gen(20260821u);
  return gen;
}

inline Rational rand_rational(long max_num = 20, long max_den = 12) {
  std::uniform_int_distribution<long> n(-max_num, max_num), d(1, max_den);
  return Rational(n(rng()), d(rng()));
}

inline Rational rand_nonzero_rational(long max_num = 20, long max_den = 12) {
  for (;;) {
    Rational q = rand_rational(max_num, max_den);
    if (q != 0) return q;
  }
}

inline RadNum rand_radnum(int max_terms = 3, long max_num = 10) {
  static const long radicands[] = {1, 2, 3, 5, 6, 7, 10, 13};
  std::uniform_int_distribution<int> count(0, max_terms);
  std::uniform_int_distribution<int> pick(0, 7);
  RadNum x;
  int k = count(rng());
  for (int i = 0; i < k; ++i)
    x += RadNum::radical(Int(radicands[pick(rng())]),
                         rand_rational(max_num, 6));
  return x;
}

inline RadNum rand_nonzero_radnum(int max_terms = 3, long max_num = 10) {
  for (;;) {
    RadNum x = rand_radnum(max_terms, max_num);
    if (!x.is_zero()) return x;
  }
}

}  // namespace testsupport
