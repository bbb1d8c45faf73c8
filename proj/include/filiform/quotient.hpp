#pragma once

#include <optional>
#include <vector>

#include "filiform/lie_algebra.hpp"

namespace filiform {

template <class S>
bool is_ideal(const LieAlgebra<S>& g, const Subspace<S>& s) {
  if (s.ambient() != static_cast<std::size_t>(g.dim()))
    throw DimensionMismatch("subspace ambient != algebra dimension");
  for (int i = 1; i <= g.dim(); ++i) {
    Vec<S> ei = vec_zero<S>(g.dim());
    ei[i - 1] = S(1);
    for (const Vec<S>& w : s.basis())
      if (!s.contains(g.bracket(ei, w))) return false;
  }
  return true;
}

template <class S>
struct SplitQuotient {
  LieAlgebra<S> algebra;        // the quotient, on the complement basis
  InnerProduct<S> ip;           // restricted inner product in that basis
  Subspace<S> h_image;          // projection of h, in quotient coordinates
  std::vector<Vec<S>> basis;    // complement basis vectors in ambient coords
};

/// Concrete quotient by an ideal that splits along h: realize g/ideal as the
/// orthogonal complement g' of the ideal, with bracket pi'([x,y]) and the
/// restricted inner product. If h is totally geodesic and the ideal equals
/// (ideal ∩ h) ⊕ (ideal ∩ h⊥), the image pi'(h) is totally geodesic again.
template <class S>
SplitQuotient<S> split_quotient(const LieAlgebra<S>& g,
                                const InnerProduct<S>& ip,
                                const Subspace<S>& h,
                                const Subspace<S>& ideal) {
  std::size_t n = g.dim();
  if (ip.dim() != n || h.ambient() != n || ideal.ambient() != n)
    throw DimensionMismatch("split_quotient operand dimensions");
  if (!is_ideal(g, ideal))
    throw NotAnIdeal("subspace is not invariant under the bracket");
  Subspace<S> hperp = orthogonal_complement(h, ip);
  std::size_t inside = subspace_intersection(ideal, h).dim() +
                       subspace_intersection(ideal, hperp).dim();
  if (inside != ideal.dim())
    throw SplitConditionFails(
        "ideal does not decompose along h and its complement");

  Subspace<S> comp = orthogonal_complement(ideal, ip);
  const std::vector<Vec<S>>& b = comp.basis();
  std::size_t d = b.size();
  Matrix<S> cols = Matrix<S>::from_cols(b);

  auto quotient_coords = [&](const Vec<S>& ambient_v) {
    Vec<S> p = project_onto(comp, ip, ambient_v);
    auto c = solve_linear(cols, p);
    if (!c) throw Error("projected vector escaped the complement basis");
    return *c;
  };

  LieAlgebra<S> q(static_cast<int>(d));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j)
      q.set_bracket(static_cast<int>(i) + 1, static_cast<int>(j) + 1,
                    quotient_coords(g.bracket(b[i], b[j])));

  Matrix<S> gram(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) gram.at(i, j) = ip.pair(b[i], b[j]);

  std::vector<Vec<S>> h_gens;
  for (const Vec<S>& w : h.basis()) h_gens.push_back(quotient_coords(w));

  return SplitQuotient<S>{std::move(q), InnerProduct<S>(std::move(gram)),
                          Subspace<S>::span(d, h_gens), b};
}

template <class S>
struct CenterProjectionReport {
  bool ok = true;
  Vec<S> center_vector;  // projected center element that fails, when !ok
  Vec<S> h_vector;       // basis vector of h it does not commute with
};

/// Projects each central basis vector onto h and verifies it commutes with
/// all of h (the projected center must land in the center of h).
template <class S>
CenterProjectionReport<S> center_projection_check(const LieAlgebra<S>& g,
                                                  const InnerProduct<S>& ip,
                                                  const Subspace<S>& h) {
  Subspace<S> zc = g.center();
  for (const Vec<S>& z : zc.basis()) {
    Vec<S> pz = project_onto(h, ip, z);
    for (const Vec<S>& b : h.basis())
      if (!vec_is_zero(g.bracket(pz, b))) return {false, pz, b};
  }
  return {};
}

}  // namespace filiform
