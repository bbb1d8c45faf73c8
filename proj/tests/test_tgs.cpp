#include <catch2/catch_amalgamated.hpp>

#include <algorithm>

#include "filiform/catalog.hpp"
#include "filiform/tgs.hpp"
#include "fixtures.hpp"
#include "support.hpp"

using namespace filiform;
using fixtures::axis;
using testsupport::rand_rational;

namespace {

Subspace<Rational> degrees(int n, std::initializer_list<int> idx) {
  std::vector<Vec<Rational>> gens;
  for (int i : idx) gens.push_back(axis(n, i));
  return Subspace<Rational>::span(n, gens);
}

InnerProduct<Rational> random_spd(int n) {
  // A^t A + n I is positive definite for any A
  Matrix<Rational> a(n, n);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      a.at(i, j) = rand_rational(3, 2);
  Matrix<Rational> g = a.transpose() * a;
  for (int i = 0; i < n; ++i) g.at(i, i) += n;
  return InnerProduct<Rational>(g);
}

bool contains_subset(const GradedSearchResult& r, std::vector<int> s) {
  return std::find(r.passing.begin(), r.passing.end(), s) != r.passing.end();
}

}  // namespace

TEST_CASE("subalgebra recognition") {
  auto g = fixtures::m0(6);
  CHECK(is_subalgebra(g, degrees(6, {2, 4, 6})));
  CHECK(is_subalgebra(g, degrees(6, {2, 3})));
  CHECK(!is_subalgebra(g, degrees(6, {1, 2})));
  CHECK(is_subalgebra(g, Subspace<Rational>::zero(6)));
  CHECK_THROWS_AS(is_subalgebra(g, Subspace<Rational>::zero(5)),
                  DimensionMismatch);
}

TEST_CASE("totally geodesic verdicts in the chain algebra") {
  auto g = fixtures::m0(6);
  auto ip = InnerProduct<Rational>::identity(6);

  auto even = is_totally_geodesic(g, ip, degrees(6, {2, 4, 6}));
  CHECK(even.verdict);
  CHECK(even.is_subalgebra);
  CHECK(!even.witness);

  auto pair56 = is_totally_geodesic(g, ip, degrees(6, {5, 6}));
  REQUIRE(!pair56.verdict);
  REQUIRE(pair56.witness.has_value());
  CHECK(pair56.witness->x == axis(6, 1));
  CHECK(pair56.witness->y == axis(6, 5));
  CHECK(pair56.witness->z == axis(6, 6));
  CHECK(pair56.witness->residual == Rational(1));

  for (int t = 0; t < 5; ++t) {
    auto rip = random_spd(6);
    CHECK(is_totally_geodesic(g, rip, degrees(6, {6})).verdict);
  }

  auto notsub = is_totally_geodesic(g, ip, degrees(6, {1, 2}));
  CHECK(!notsub.verdict);
  CHECK(!notsub.is_subalgebra);
  CHECK(!notsub.witness);
}

TEST_CASE("verdict invariance under scaling and basis change") {
  auto g = fixtures::m2(6);
  auto ip = InnerProduct<Rational>::identity(6);
  auto scaled = InnerProduct<Rational>(Rational(7, 3) * ip.gram());
  std::vector<Subspace<Rational>> hs{
      degrees(6, {2, 4, 6}), degrees(6, {5, 6}), degrees(6, {3, 6}),
      Subspace<Rational>::span(
          6, {vec_add(axis(6, 2), axis(6, 4, Rational(3))), axis(6, 4),
              axis(6, 6, Rational(-2))})};
  for (const auto& h : hs) {
    bool v = is_totally_geodesic(g, ip, h).verdict;
    CHECK(is_totally_geodesic(g, scaled, h).verdict == v);
  }
  // recombined generators span the same subspace, so same verdict
  CHECK(is_totally_geodesic(g, ip, hs[0]).verdict ==
        is_totally_geodesic(g, ip, hs[3]).verdict);
}

TEST_CASE("adapted basis") {
  auto g = fixtures::m0(5);
  auto id = adapted_basis(g, InnerProduct<Rational>::identity(5));
  for (int i = 1; i <= 5; ++i) CHECK(id[i - 1] == axis(5, i));

  Matrix<Rational> gram = Matrix<Rational>::identity(5);
  gram.at(3, 4) = gram.at(4, 3) = Rational(1, 2);
  auto e = adapted_basis(g, InnerProduct<Rational>(gram));
  CHECK(e[0] == axis(5, 1));
  CHECK(e[1] == axis(5, 2));
  CHECK(e[2] == axis(5, 3));
  CHECK(e[3] == vec_add(axis(5, 4), axis(5, 5, Rational(-1, 2))));
  CHECK(e[4] == axis(5, 5));
}

TEST_CASE("adapted basis flag property under random inner products") {
  auto g = fixtures::m2(8);
  for (int t = 0; t < 10; ++t) {
    auto ip = random_spd(8);
    auto e = adapted_basis(g, ip);
    for (int k = 1; k <= 8; ++k) {
      std::vector<Vec<Rational>> upper_e(e.begin() + (k - 1), e.end());
      std::vector<Vec<Rational>> upper_x;
      for (int i = k; i <= 8; ++i) upper_x.push_back(axis(8, i));
      CHECK(Subspace<Rational>::span(8, upper_e) ==
            Subspace<Rational>::span(8, upper_x));
    }
  }
}

TEST_CASE("graded search attains the half-dimension bound") {
  auto ip6 = InnerProduct<Rational>::identity(6);
  std::vector<Vec<Rational>> std6;
  for (int i = 1; i <= 6; ++i) std6.push_back(axis(6, i));
  auto r6 = graded_tgs_search(fixtures::m0(6), ip6, std6);
  CHECK(r6.max_dimension == 3);
  CHECK(contains_subset(r6, {2, 4, 6}));

  auto ip7 = InnerProduct<Rational>::identity(7);
  std::vector<Vec<Rational>> std7;
  for (int i = 1; i <= 7; ++i) std7.push_back(axis(7, i));
  auto r7 = graded_tgs_search(fixtures::m01(3), ip7, std7);
  CHECK(r7.max_dimension == 3);
  CHECK(contains_subset(r7, {2, 4, 6}));

  auto ip4 = InnerProduct<Rational>::identity(4);
  std::vector<Vec<Rational>> std4;
  for (int i = 1; i <= 4; ++i) std4.push_back(axis(4, i));
  auto r4 = graded_tgs_search(fixtures::m0(4), ip4, std4);
  CHECK(r4.max_dimension == 2);
  CHECK(contains_subset(r4, {2, 4}));
}

TEST_CASE("no passing subset of dimension two or more touches degree one") {
  auto g = fixtures::m0(6);
  std::vector<Vec<Rational>> std6;
  for (int i = 1; i <= 6; ++i) std6.push_back(axis(6, i));
  GradedSearchOptions opt;
  opt.include_degree_one = true;
  auto r = graded_tgs_search(g, InnerProduct<Rational>::identity(6), std6,
                             opt);
  // the whole algebra passes vacuously, so only proper subsets count
  for (const auto& s : r.passing)
    if (s.size() >= 2 && s.size() < 6)
      CHECK(std::find(s.begin(), s.end(), 1) == s.end());
}

TEST_CASE("search determinism across thread counts") {
  auto g = fixtures::m2(8);
  auto ip = InnerProduct<Rational>::identity(8);
  std::vector<Vec<Rational>> std8;
  for (int i = 1; i <= 8; ++i) std8.push_back(axis(8, i));
  GradedSearchOptions one, four;
  one.threads = 1;
  four.threads = 4;
  auto a = graded_tgs_search(g, ip, std8, one);
  auto b = graded_tgs_search(g, ip, std8, four);
  CHECK(a.passing == b.passing);
  CHECK(a.max_dimension == b.max_dimension);
}

TEST_CASE("search guard rails") {
  auto g = fixtures::m0(21);
  std::vector<Vec<Rational>> basis;
  for (int i = 1; i <= 21; ++i) basis.push_back(axis(21, i));
  CHECK_THROWS_AS(
      graded_tgs_search(g, InnerProduct<Rational>::identity(21), basis),
      SearchTooLarge);

  auto g5 = fixtures::m0(5);
  std::vector<Vec<Rational>> bad;
  for (int i = 1; i <= 5; ++i) bad.push_back(axis(5, 6 - i));
  CHECK_THROWS_AS(
      graded_tgs_search(g5, InnerProduct<Rational>::identity(5), bad),
      AdaptedBasisDegenerate);
}
