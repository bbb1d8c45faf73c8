#pragma once

#include <vector>

#include "filiform/matrix.hpp"
#include "filiform/subspace.hpp"

namespace filiform {

/// Positive-definite symmetric bilinear form, held as its Gram matrix in the
/// ambient coordinate basis. Definiteness is certified at construction by
/// exact signs of all leading principal minors.
template <class S>
class InnerProduct {
 public:
  explicit InnerProduct(Matrix<S> gram) : gram_(std::move(gram)) {
    if (gram_.rows() != gram_.cols())
      throw DimensionMismatch("gram matrix not square");
    for (std::size_t i = 0; i < gram_.rows(); ++i)
      for (std::size_t j = i + 1; j < gram_.cols(); ++j)
        if (!(gram_.at(i, j) == gram_.at(j, i)))
          throw NotPositiveDefinite("gram matrix not symmetric");
    for (std::size_t k = 1; k <= gram_.rows(); ++k) {
      Matrix<S> lead(k, k);
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) lead.at(i, j) = gram_.at(i, j);
      if (sign_of(determinant(lead)) <= 0)
        throw NotPositiveDefinite("leading principal minor " +
                                  std::to_string(k) + " not positive");
    }
  }

  static InnerProduct identity(std::size_t n) {
    return InnerProduct(Matrix<S>::identity(n));
  }

  std::size_t dim() const { return gram_.rows(); }
  const Matrix<S>& gram() const { return gram_; }

  S pair(const Vec<S>& x, const Vec<S>& y) const {
    if (x.size() != dim() || y.size() != dim())
      throw DimensionMismatch("inner product operand length");
    S r(0);
    for (std::size_t i = 0; i < dim(); ++i) {
      if (is_zero(x[i])) continue;
      for (std::size_t j = 0; j < dim(); ++j) {
        if (is_zero(gram_.at(i, j))) continue;
        r += x[i] * gram_.at(i, j) * y[j];
      }
    }
    return r;
  }

 private:
  Matrix<S> gram_;
};

/// {y : <x, y> = 0 for all x in s}, the kernel of (basis rows) * gram.
template <class S>
Subspace<S> orthogonal_complement(const Subspace<S>& s,
                                  const InnerProduct<S>& ip) {
  if (s.ambient() != ip.dim())
    throw DimensionMismatch("subspace ambient != inner product dimension");
  if (s.dim() == 0) return Subspace<S>::full(s.ambient());
  Matrix<S> m = Matrix<S>::from_rows(s.basis()) * ip.gram();
  return Subspace<S>::span(s.ambient(), nullspace(m));
}

/// Orthogonal projection of v onto s with respect to ip.
template <class S>
Vec<S> project_onto(const Subspace<S>& s, const InnerProduct<S>& ip,
                    const Vec<S>& v) {
  if (s.ambient() != ip.dim() || v.size() != ip.dim())
    throw DimensionMismatch("projection operand dimensions");
  if (s.dim() == 0) return vec_zero<S>(s.ambient());
  std::size_t d = s.dim();
  Matrix<S> g(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      g.at(i, j) = ip.pair(s.basis()[i], s.basis()[j]);
  Vec<S> rhs(d);
  for (std::size_t i = 0; i < d; ++i) rhs[i] = ip.pair(s.basis()[i], v);
  auto coef = solve_linear(g, rhs);
  if (!coef) throw Error("projection gram system inconsistent");
  Vec<S> r = vec_zero<S>(s.ambient());
  for (std::size_t i = 0; i < d; ++i) vec_axpy(r, (*coef)[i], s.basis()[i]);
  return r;
}

/// Orthogonalizes a degree-ordered basis from the top degree downward:
/// E_n = X_n, then E_i = X_i minus its components along E_{i+1}..E_n.
/// Output is orthogonal but deliberately NOT normalized, so entries stay in
/// the scalar field of the input. Throws NotPositiveDefinite when a squared
/// norm fails to be positive (dependent input or indefinite form).
template <class S>
std::vector<Vec<S>> gram_schmidt_by_degree(const std::vector<Vec<S>>& basis,
                                           const InnerProduct<S>& ip) {
  std::vector<Vec<S>> e = basis;
  std::vector<S> norms(e.size(), S(0));
  for (std::size_t ii = e.size(); ii-- > 0;) {
    for (std::size_t j = ii + 1; j < e.size(); ++j) {
      S c = S(0) - ip.pair(e[ii], e[j]) * invert(norms[j]);
      vec_axpy(e[ii], c, e[j]);
    }
    norms[ii] = ip.pair(e[ii], e[ii]);
    if (sign_of(norms[ii]) <= 0)
      throw NotPositiveDefinite(
          "nonpositive squared norm at degree position " +
          std::to_string(ii + 1));
  }
  return e;
}

}  // namespace filiform
