#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "filiform/errors.hpp"
#include "filiform/rational.hpp"

namespace filiform {

/// Dense univariate polynomial over the rationals, coefficients ascending.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
    trim();
  }
  static Polynomial constant(Rational v) {
    return Polynomial({std::move(v)});
  }
  static Polynomial monomial(int deg, Rational v) {
    std::vector<Rational> c(deg + 1, Rational(0));
    c[deg] = std::move(v);
    return Polynomial(std::move(c));
  }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  Rational coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return Rational(0);
    return c_[i];
  }

  Rational eval(const Rational& t) const {
    Rational r(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * t + *it;
    return r;
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()), Rational(0));
    for (std::size_t i = 0; i < c.size(); ++i)
      c[i] = a.coeff(static_cast<int>(i)) + b.coeff(static_cast<int>(i));
    return Polynomial(std::move(c));
  }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()), Rational(0));
    for (std::size_t i = 0; i < c.size(); ++i)
      c[i] = a.coeff(static_cast<int>(i)) - b.coeff(static_cast<int>(i));
    return Polynomial(std::move(c));
  }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> c(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return Polynomial(std::move(c));
  }
  friend Polynomial operator*(const Rational& s, const Polynomial& a) {
    std::vector<Rational> c = a.c_;
    for (auto& x : c) x *= s;
    return Polynomial(std::move(c));
  }
  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.c_ == b.c_;
  }

 private:
  std::vector<Rational> c_;
  void trim() {
    while (!c_.empty() && filiform::is_zero(c_.back())) c_.pop_back();
  }
};

/// Truncated square root: P of degree <= r with t^(r+1) dividing P^2 - chi,
/// by the recursion c_0 = sqrt(chi(0)), 2 c_0 c_i = chi_i - sum c_j c_{i-j}.
/// Requires chi(0) to be the square of a positive rational.
inline Polynomial poly_sqrt_truncate(const Polynomial& chi, int r) {
  if (chi.degree() > r) throw DegreeTooHigh("chi degree exceeds truncation order");
  if (sign_of(chi.coeff(0)) <= 0)
    throw NonSquareConstantTerm("constant term must be positive");
  auto root = exact_rational_sqrt(chi.coeff(0));
  if (!root)
    throw NonSquareConstantTerm("constant term is not a rational square");
  std::vector<Rational> c(r + 1, Rational(0));
  c[0] = *root;
  for (int i = 1; i <= r; ++i) {
    Rational s(0);
    for (int j = 1; j < i; ++j) s += c[j] * c[i - j];
    c[i] = (chi.coeff(i) - s) / (2 * c[0]);
  }
  return Polynomial(std::move(c));
}

}  // namespace filiform
