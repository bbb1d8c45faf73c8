#pragma once

#include <vector>

#include "filiform/matrix.hpp"

namespace filiform {

/// Linear subspace of an ambient coordinate space, stored as the RREF of a
/// spanning set (nonzero rows only). The normal form is unique per subspace,
/// so equality of representations is equality of subspaces.
template <class S>
class Subspace {
 public:
  static Subspace span(std::size_t ambient, const std::vector<Vec<S>>& gens) {
    for (const auto& v : gens)
      if (v.size() != ambient)
        throw DimensionMismatch("generator length != ambient dimension");
    Subspace s;
    s.ambient_ = ambient;
    if (!gens.empty()) {
      RrefResult<S> r = rref(Matrix<S>::from_rows(gens));
      for (std::size_t i = 0; i < r.rank; ++i) s.basis_.push_back(r.mat.row(i));
    }
    return s;
  }

  static Subspace zero(std::size_t ambient) { return span(ambient, {}); }

  static Subspace full(std::size_t ambient) {
    std::vector<Vec<S>> rows;
    for (std::size_t i = 0; i < ambient; ++i) {
      Vec<S> e(ambient, S(0));
      e[i] = S(1);
      rows.push_back(std::move(e));
    }
    return span(ambient, rows);
  }

  std::size_t ambient() const { return ambient_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<Vec<S>>& basis() const { return basis_; }

  bool contains(const Vec<S>& v) const {
    if (v.size() != ambient_)
      throw DimensionMismatch("vector length != ambient dimension");
    Vec<S> w = v;
    for (const Vec<S>& row : basis_) {
      std::size_t p = pivot_of(row);
      if (!is_zero(w[p])) {
        S f = w[p];
        for (std::size_t j = 0; j < ambient_; ++j) w[j] -= f * row[j];
      }
    }
    return vec_is_zero(w);
  }

  bool contains(const Subspace& other) const {
    for (const Vec<S>& v : other.basis_)
      if (!contains(v)) return false;
    return true;
  }

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }
  friend bool operator!=(const Subspace& a, const Subspace& b) {
    return !(a == b);
  }

 private:
  std::size_t ambient_ = 0;
  std::vector<Vec<S>> basis_;

  static std::size_t pivot_of(const Vec<S>& row) {
    for (std::size_t j = 0; j < row.size(); ++j)
      if (!is_zero(row[j])) return j;
    throw Error("zero row in subspace basis");
  }
};

template <class S>
Subspace<S> subspace_sum(const Subspace<S>& a, const Subspace<S>& b) {
  if (a.ambient() != b.ambient())
    throw DimensionMismatch("subspace sum: ambient dimensions differ");
  std::vector<Vec<S>> gens = a.basis();
  for (const auto& v : b.basis()) gens.push_back(v);
  return Subspace<S>::span(a.ambient(), gens);
}

/// Intersection via the kernel of [A^t | -B^t] on stacked coefficients.
template <class S>
Subspace<S> subspace_intersection(const Subspace<S>& a, const Subspace<S>& b) {
  if (a.ambient() != b.ambient())
    throw DimensionMismatch("subspace intersection: ambient dimensions differ");
  std::size_t n = a.ambient(), da = a.dim(), db = b.dim();
  if (da == 0 || db == 0) return Subspace<S>::zero(n);
  Matrix<S> m(n, da + db);
  for (std::size_t j = 0; j < da; ++j)
    for (std::size_t i = 0; i < n; ++i) m.at(i, j) = a.basis()[j][i];
  for (std::size_t j = 0; j < db; ++j)
    for (std::size_t i = 0; i < n; ++i)
      m.at(i, da + j) = S(0) - b.basis()[j][i];
  std::vector<Vec<S>> gens;
  for (const Vec<S>& coef : nullspace(m)) {
    Vec<S> v(n, S(0));
    for (std::size_t j = 0; j < da; ++j)
      vec_axpy(v, coef[j], a.basis()[j]);
    gens.push_back(std::move(v));
  }
  return Subspace<S>::span(n, gens);
}

}  // namespace filiform
