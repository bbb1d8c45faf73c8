#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "filiform/errors.hpp"
#include "filiform/inner_product.hpp"
#include "filiform/lie_algebra.hpp"
#include "filiform/parallel.hpp"
#include "filiform/subspace.hpp"

namespace filiform {

template <class S>
struct TgsWitness {
  Vec<S> x;  // from the orthogonal complement of h
  Vec<S> y;
  Vec<S> z;  // y, z from h
  S residual;
};

template <class S>
struct TgsReport {
  bool verdict = false;
  bool is_subalgebra = false;
  std::optional<TgsWitness<S>> witness;
};

template <class S>
bool is_subalgebra(const LieAlgebra<S>& g, const Subspace<S>& h) {
  if (h.ambient() != static_cast<std::size_t>(g.dim()))
    throw DimensionMismatch("subspace ambient != algebra dimension");
  const auto& b = h.basis();
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t j = i + 1; j < b.size(); ++j)
      if (!h.contains(g.bracket(b[i], b[j]))) return false;
  return true;
}

/// h is totally geodesic iff <[X,Y],Z> + <[X,Z],Y> = 0 for all X in the
/// complement of h and Y, Z in h; bilinearity reduces this to basis triples.
/// Reports the first violating triple in basis order.
template <class S>
TgsReport<S> is_totally_geodesic(const LieAlgebra<S>& g,
                                 const InnerProduct<S>& ip,
                                 const Subspace<S>& h) {
  TgsReport<S> rep;
  rep.is_subalgebra = is_subalgebra(g, h);
  if (!rep.is_subalgebra) return rep;
  Subspace<S> hperp = orthogonal_complement(h, ip);
  const auto& hb = h.basis();
  for (const Vec<S>& x : hperp.basis())
    for (std::size_t yi = 0; yi < hb.size(); ++yi)
      for (std::size_t zi = yi; zi < hb.size(); ++zi) {
        S r = ip.pair(g.bracket(x, hb[yi]), hb[zi]) +
              ip.pair(g.bracket(x, hb[zi]), hb[yi]);
        if (!is_zero(r)) {
          rep.witness = TgsWitness<S>{x, hb[yi], hb[zi], std::move(r)};
          return rep;
        }
      }
  rep.verdict = true;
  return rep;
}

/// Degree-descending orthogonalization of the structure basis. The output
/// satisfies deg(E_i) = i and <[E_1,E_i], E_{i+1}> != 0 for 1 < i < n, so
/// span(E_k..E_n) recovers the degree filtration.
template <class S>
std::vector<Vec<S>> adapted_basis(const LieAlgebra<S>& g,
                                  const InnerProduct<S>& ip) {
  int n = g.dim();
  std::vector<Vec<S>> standard;
  standard.reserve(n);
  for (int i = 0; i < n; ++i) {
    Vec<S> e = vec_zero<S>(n);
    e[i] = from_rational<S>(Rational(1));
    standard.push_back(std::move(e));
  }
  std::vector<Vec<S>> basis = gram_schmidt_by_degree(standard, ip);
  for (int i = 1; i <= n; ++i)
    if (!(g.degree(basis[i - 1]) == DegreeValue::finite(i)))
      throw AdaptedBasisDegenerate("degree of adapted vector is off");
  for (int i = 2; i < n; ++i)
    if (is_zero(ip.pair(g.bracket(basis[0], basis[i - 1]), basis[i])))
      throw AdaptedBasisDegenerate("adapted bracket pairing vanished");
  return basis;
}

struct GradedSearchOptions {
  int cap = 20;
  bool include_degree_one = false;
  unsigned threads = 1;
};

struct GradedSearchResult {
  std::vector<std::vector<int>> passing;  // degree subsets, ascending
  std::size_t max_dimension = 0;
};

/// Enumerates spans of subsets of a degree-adapted basis (degree 1 excluded
/// unless opted in) and keeps those passing the totally geodesic test.
template <class S>
GradedSearchResult graded_tgs_search(const LieAlgebra<S>& g,
                                     const InnerProduct<S>& ip,
                                     const std::vector<Vec<S>>& basis,
                                     const GradedSearchOptions& opt = {}) {
  int n = g.dim();
  if (n > opt.cap) throw SearchTooLarge("dimension exceeds the search cap");
  if (basis.size() != static_cast<std::size_t>(n))
    throw DimensionMismatch("search basis size != dimension");
  for (int i = 1; i <= n; ++i)
    if (!(g.degree(basis[i - 1]) == DegreeValue::finite(i)))
      throw AdaptedBasisDegenerate("search basis is not degree-adapted");

  std::vector<int> pool;
  for (int i = opt.include_degree_one ? 1 : 2; i <= n; ++i) pool.push_back(i);
  std::size_t masks = std::size_t(1) << pool.size();

  unsigned threads = opt.threads ? opt.threads : default_thread_count();
  std::vector<std::vector<std::vector<int>>> found(
      threads ? threads : 1);
  parallel_chunks(masks, threads,
                  [&](unsigned worker, std::size_t lo, std::size_t hi) {
    for (std::size_t mask = lo; mask < hi; ++mask) {
      std::vector<int> subset;
      std::vector<Vec<S>> gens;
      for (std::size_t b = 0; b < pool.size(); ++b)
        if (mask >> b & 1) {
          subset.push_back(pool[b]);
          gens.push_back(basis[pool[b] - 1]);
        }
      Subspace<S> h = Subspace<S>::span(n, gens);
      if (!is_subalgebra(g, h)) continue;
      if (is_totally_geodesic(g, ip, h).verdict)
        found[worker].push_back(std::move(subset));
    }
  });

  GradedSearchResult res;
  for (auto& part : found)
    for (auto& s : part) {
      res.max_dimension = std::max(res.max_dimension, s.size());
      res.passing.push_back(std::move(s));
    }
  return res;
}

}  // namespace filiform
