// Runs the two constructive certifications: the codimension-four totally
// geodesic subalgebra of m0,1(2k+1), and the kernel polynomial for the
// bracket pencil of m0,3(2k+3).

#include <iostream>

#include "filiform/m01.hpp"
#include "filiform/m03.hpp"

using namespace filiform;

int main() {
  int k = 3;

  std::cout << "m0,1(" << 2 * k + 1 << "): building the metric algebra with "
            << "a totally geodesic subalgebra of codimension 4\n";
  m01::M01Construction c = m01::run_pipeline(k);
  for (const auto& line : c.report)
    std::cout << "  " << (line.ok ? "ok  " : "FAIL") << "  " << line.name
              << "\n";
  std::cout << "  certified: " << (c.certified ? "yes" : "no")
            << ", dim = " << c.algebra.dim() << ", dim h = " << c.h.dim()
            << "\n\n";

  std::cout << "m0,3(" << 2 * k + 3 << "): kernel of a K1, K2, K3 pencil\n";
  auto kt = m03::build_ktriple(k);
  Rational a(1), b(2), c3(1, 2);
  auto combo = m03::combination(kt, a, b, c3);
  auto ker = m03::kernel_poly_formula(k, a, b, c3);
  std::cout << "  kernel vector (";
  for (std::size_t i = 0; i < ker.size(); ++i)
    std::cout << (i ? ", " : "") << to_string(ker[i]);
  std::cout << ")\n  annihilates the pencil: "
            << (vec_is_zero(combo.apply(ker)) ? "yes" : "no")
            << ", rank = " << rank(combo) << " of " << combo.rows() << "\n";
  std::cout << "  span of kernels over the pencil: dimension "
            << m03::kernel_span_dimension(k) << "\n";
  return 0;
}
