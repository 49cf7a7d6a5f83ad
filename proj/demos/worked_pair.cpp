// End-to-end walkthrough of f = (x^2 + y^3)/(x + y) at the origin of C^2.

#include "newtmon/parse.hpp"
#include "newtmon/spectrum.hpp"

#include <iostream>

using namespace newtmon;

int main() {
  auto P = parse_polynomial("x^2 + y^3", 2);
  auto Q = parse_polynomial("x + y", 2);
  auto pair = make_pair(P, Q, Mode::local);

  std::cout << "f = (" << P.str() << ") / (" << Q.str() << ")\n\n";
  std::cout << "zeta_{f,0}(t) = " << zeta_local(pair).str() << "\n";
  for (int k = 1; k <= 3; ++k) {
    RootOfUnity l(k, 4);
    if (l.is_one()) continue;
    std::cout << "multiplicity(" << l.str() << ") = " << multiplicity(pair, l) << "\n";
  }

  SpectrumEngine eng(pair);
  std::cout << "\nCayley cells (one per compact face of the Newton polyhedron):\n";
  for (const auto& c : eng.cells())
    std::cout << "  dim " << c.gamma.dim() << " face: lattice distance " << c.d
              << ", s = " << c.s << ", m = " << c.m << "\n";

  RootOfUnity i(1, 4);
  std::cout << "\nE_{1/4}(F_0; u, v) = " << eng.e_lambda(i).E.str() << "\n";
  auto jc = eng.jordan_counts(i);
  std::cout << "Jordan blocks at lambda = 1/4:";
  for (const auto& [k, j] : jc.blocks) std::cout << "  " << j << " block(s) of size " << k;
  std::cout << "\n";
  std::cout << "reduced Hodge spectrum = " << eng.reduced_spectrum().str() << "\n";
  return 0;
}
