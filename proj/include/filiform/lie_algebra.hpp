#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "filiform/inner_product.hpp"
#include "filiform/matrix.hpp"
#include "filiform/subspace.hpp"

namespace filiform {

/// Degree of a vector in a graded algebra; the zero vector has degree
/// infinity by convention.
struct DegreeValue {
  bool infinite = false;
  int k = 0;

  static DegreeValue finite(int k) { return {false, k}; }
  static DegreeValue inf() { return {true, 0}; }

  friend bool operator==(const DegreeValue&, const DegreeValue&) = default;

  /// deg(a) >= deg(b), with infinity as the top element.
  bool at_least(const DegreeValue& o) const {
    if (infinite) return true;
    if (o.infinite) return false;
    return k >= o.k;
  }
};

struct JacobiViolation {
  int i, j, k;
};

template <class S>
struct JacobiReport {
  bool ok = true;
  int i = 0, j = 0, k = 0;   // first violating triple when !ok
  Vec<S> residual;           // value of the cyclic sum there
  std::vector<JacobiViolation> all;  // filled only by the verbose scan
};

struct GradingReport {
  bool ok = true;
  int i = 0, j = 0;  // first bracket with support off coordinate i+j
};

/// Finite-dimensional Lie algebra given by structure constants on a basis
/// X_1..X_n. Only pairs i < j are stored; antisymmetry is implicit. Basis
/// indices are 1-based throughout the API, coordinates are 0-based vectors.
template <class S>
class LieAlgebra {
 public:
  explicit LieAlgebra(int dim, bool graded = false)
      : dim_(dim), graded_(graded) {
    if (dim < 1) throw BadDimension("algebra dimension must be positive");
  }

  int dim() const { return dim_; }
  bool graded() const { return graded_; }
  void set_graded(bool g) { graded_ = g; }

  const std::map<std::pair<int, int>, Vec<S>>& structure() const {
    return sc_;
  }

  void set_bracket(int i, int j, Vec<S> v) {
    check_pair(i, j);
    if (v.size() != static_cast<std::size_t>(dim_))
      throw DimensionMismatch("bracket value length != dim");
    if (vec_is_zero(v))
      sc_.erase({i, j});
    else
      sc_[{i, j}] = std::move(v);
  }

  /// [X_i, X_j] for any index order (antisymmetry applied).
  Vec<S> bracket_basis(int i, int j) const {
    if (i == j) return vec_zero<S>(dim_);
    bool flip = i > j;
    if (flip) std::swap(i, j);
    check_pair(i, j);
    auto it = sc_.find({i, j});
    if (it == sc_.end()) return vec_zero<S>(dim_);
    Vec<S> v = it->second;
    if (flip)
      for (S& x : v) x = S(0) - x;
    return v;
  }

  /// Bilinear antisymmetric extension of the structure constants.
  Vec<S> bracket(const Vec<S>& x, const Vec<S>& y) const {
    if (x.size() != static_cast<std::size_t>(dim_) ||
        y.size() != static_cast<std::size_t>(dim_))
      throw DimensionMismatch("bracket operand length != dim");
    Vec<S> r = vec_zero<S>(dim_);
    for (const auto& [ij, v] : sc_) {
      auto [i, j] = ij;
      S c = x[i - 1] * y[j - 1] - x[j - 1] * y[i - 1];
      if (!is_zero(c)) vec_axpy(r, c, v);
    }
    return r;
  }

  /// Matrix of ad(x): y -> [x, y] in the structure basis.
  Matrix<S> ad(const Vec<S>& x) const {
    Matrix<S> m(dim_, dim_);
    for (int j = 1; j <= dim_; ++j) {
      Vec<S> ej = vec_zero<S>(dim_);
      ej[j - 1] = S(1);
      Vec<S> col = bracket(x, ej);
      for (int i = 0; i < dim_; ++i) m.at(i, j - 1) = col[i];
    }
    return m;
  }

  /// Exact check of the cyclic Jacobi sum over all i < j < k. Stops at the
  /// first violation unless all_violations is set.
  JacobiReport<S> jacobi_check(bool all_violations = false) const {
    JacobiReport<S> rep;
    for (int i = 1; i <= dim_; ++i)
      for (int j = i + 1; j <= dim_; ++j)
        for (int k = j + 1; k <= dim_; ++k) {
          Vec<S> s = basis_bracket_with(i, bracket_basis(j, k));
          vec_add_inplace(s, basis_bracket_with(j, bracket_basis(k, i)));
          vec_add_inplace(s, basis_bracket_with(k, bracket_basis(i, j)));
          if (!vec_is_zero(s)) {
            if (rep.ok) {
              rep.ok = false;
              rep.i = i;
              rep.j = j;
              rep.k = k;
              rep.residual = s;
              if (!all_violations) return rep;
            }
            rep.all.push_back({i, j, k});
          }
        }
    return rep;
  }

  /// Verifies each stored bracket is supported on coordinate i+j only
  /// (and vanishes when i+j exceeds the dimension).
  GradingReport grading_check() const {
    for (const auto& [ij, v] : sc_) {
      auto [i, j] = ij;
      for (int c = 1; c <= dim_; ++c)
        if (c != i + j && !is_zero(v[c - 1])) return {false, i, j};
      if (i + j > dim_ && !vec_is_zero(v)) return {false, i, j};
    }
    return {};
  }

  /// Largest k with y in span(X_k..X_n); infinity for the zero vector.
  DegreeValue degree(const Vec<S>& y) const {
    if (!graded_) throw NotGraded("degree requires a graded algebra");
    if (y.size() != static_cast<std::size_t>(dim_))
      throw DimensionMismatch("degree operand length != dim");
    for (int i = 0; i < dim_; ++i)
      if (!is_zero(y[i])) return DegreeValue::finite(i + 1);
    return DegreeValue::inf();
  }

  /// Joint kernel of all ad(X_j), as a subspace.
  Subspace<S> center() const {
    Matrix<S> m(dim_ * dim_, dim_);
    for (int j = 1; j <= dim_; ++j)
      for (int i = 1; i <= dim_; ++i) {
        // column i of block j: [X_i, X_j]
        Vec<S> v = bracket_basis(i, j);
        for (int r = 0; r < dim_; ++r)
          m.at((j - 1) * dim_ + r, i - 1) = v[r];
      }
    return Subspace<S>::span(dim_, nullspace(m));
  }

  /// g = g_(1) ⊇ [g,g] ⊇ [g,[g,g]] ⊇ ..., down to stabilization or zero.
  std::vector<Subspace<S>> lower_central_series() const {
    std::vector<Subspace<S>> series{Subspace<S>::full(dim_)};
    for (int step = 0; step <= dim_; ++step) {
      const Subspace<S>& cur = series.back();
      if (cur.dim() == 0) break;
      std::vector<Vec<S>> gens;
      for (int i = 1; i <= dim_; ++i) {
        Vec<S> ei = vec_zero<S>(dim_);
        ei[i - 1] = S(1);
        for (const Vec<S>& w : cur.basis()) gens.push_back(bracket(ei, w));
      }
      Subspace<S> next = Subspace<S>::span(dim_, gens);
      if (next.dim() == cur.dim()) break;  // stabilized, not nilpotent
      series.push_back(std::move(next));
    }
    return series;
  }

  bool is_nilpotent() const {
    return lower_central_series().back().dim() == 0;
  }

  /// Filiform: series dimensions are exactly n, n-2, n-3, ..., 1, 0.
  bool is_filiform() const {
    std::vector<std::size_t> dims;
    for (const auto& s : lower_central_series()) dims.push_back(s.dim());
    std::vector<std::size_t> expect{static_cast<std::size_t>(dim_)};
    for (int d = dim_ - 2; d >= 0; --d)
      expect.push_back(static_cast<std::size_t>(d));
    return dims == expect;
  }

 private:
  int dim_;
  bool graded_;
  std::map<std::pair<int, int>, Vec<S>> sc_;

  void check_pair(int i, int j) const {
    if (i < 1 || j <= i || j > dim_)
      throw IndexOutOfRange("bracket indices (" + std::to_string(i) + "," +
                            std::to_string(j) + ") out of range");
  }

  // [X_i, v]
  Vec<S> basis_bracket_with(int i, const Vec<S>& v) const {
    Vec<S> ei = vec_zero<S>(dim_);
    ei[i - 1] = S(1);
    return bracket(ei, v);
  }
};

template <class S>
LieAlgebra<S> promote_algebra(const LieAlgebra<Rational>& g) {
  LieAlgebra<S> r(g.dim(), g.graded());
  for (const auto& [ij, v] : g.structure())
    r.set_bracket(ij.first, ij.second, promote_vec<S>(v));
  return r;
}

}  // namespace filiform
