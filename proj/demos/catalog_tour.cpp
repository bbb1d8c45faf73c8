// Builds a few catalog algebras, prints their bracket tables, and runs the
// graded totally-geodesic search under the identity inner product.

#include <iostream>

#include "filiform/catalog.hpp"
#include "filiform/tgs.hpp"

using namespace filiform;
using catalog::Family;

static void tour(const catalog::FamilySpec& spec) {
  std::vector<std::string> warnings;
  LieAlgebra<Rational> g = catalog::build(spec, &warnings);
  int n = g.dim();
  std::cout << catalog::family_name(spec.family) << "(" << n << ")";
  if (spec.alpha) std::cout << " at alpha = " << to_string(*spec.alpha);
  std::cout << "\n";
  for (const auto& [key, value] : g.structure()) {
    std::cout << "  [X_" << key.first << ", X_" << key.second << "] =";
    for (int t = 0; t < n; ++t)
      if (!is_zero(value[t]))
        std::cout << " + (" << to_string(value[t]) << ") X_" << (t + 1);
    std::cout << "\n";
  }

  InnerProduct<Rational> ip(Matrix<Rational>::identity(n));
  auto basis = adapted_basis(g, ip);
  auto res = graded_tgs_search(g, ip, basis, {});
  std::cout << "  totally geodesic degree subsets (max dimension "
            << res.max_dimension << "):\n";
  for (const auto& s : res.passing) {
    std::cout << "    {";
    for (std::size_t i = 0; i < s.size(); ++i)
      std::cout << (i ? ", " : "") << s[i];
    std::cout << "}\n";
  }
  std::cout << "\n";
}

int main() {
  tour({Family::m0, 6, {}});
  tour({Family::m2, 7, {}});
  tour({Family::g9, 9, Rational(1, 2)});
  return 0;
}
