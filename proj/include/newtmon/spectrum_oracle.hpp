#pragma once

// Literal finite evaluation of the reduced-spectrum display
//   sum_gamma (-1)^{n-1-dim gamma} (1-t)^{s_gamma} h_gamma(t),
//   h_gamma(t) = sum_beta { phi(box, nu; floor(beta)+1) - phi(box, nu; floor(beta)) } t^beta,
// truncated to exponents below the requested bound.  The weighted counts are
// done from scratch on the Cayley boxes (no shared path with the Ehrhart or
// spectrum engines).

#include "newtmon/cayley.hpp"
#include "newtmon/oracles.hpp"
#include "newtmon/poly_ring.hpp"

#include <map>
#include <vector>

namespace newtmon::oracle {

inline PuiseuxPolynomial spectrum_by_definition(const MeroPair& pair, int exponent_bound) {
  if (exponent_bound < pair.n + 2)
    throw std::invalid_argument("spectrum_by_definition: bound must be at least n + 2");
  PuiseuxPolynomial total;
  for (const auto& cell : cayley_cells(pair)) {
    // Affine weight on the box: w(v, m) = <a, v> + c*m  with value 0 on the
    // gamma(P) side and 1 on the gamma(Q) side, solved directly.
    RatMatrix rows;
    RatVec rhs;
    for (const auto& v : cell.faceP.vertices()) {
      RatVec r = to_rat(v);
      r.push_back(Rat(1));
      rows.push_back(r);
      rhs.push_back(Rat(0));
    }
    for (const auto& v : cell.faceQ.vertices()) {
      RatVec r = to_rat(v);
      r.push_back(Rat(1));
      rows.push_back(r);
      rhs.push_back(Rat(1));
    }
    auto sol = solve_linear_system(rows, rhs);
    if (!sol) throw std::logic_error("spectrum_by_definition: no affine weight");
    RatVec grad(sol->begin(), sol->end() - 1);
    Rat cst = sol->back();

    BruteHull hull(cell.box.vertices());
    // phi_lambda(box, nu; m) for all classes at once.
    auto phi = [&](const Int& m) {
      std::map<Rat, Int> counts;
      if (m == 0) return counts;  // lambda = 1 only; fractional classes empty
      for (const auto& v : hull.dilated_lattice_points(m)) {
        Rat w = dot_qq(grad, to_rat(v)) + cst * Rat(m);
        Rat cls = frac_part(w);
        if (cls != 0) counts[cls] += 1;
      }
      return counts;
    };
    std::vector<std::map<Rat, Int>> phis(exponent_bound + 2);
    for (int m = 0; m <= exponent_bound + 1; ++m) phis[m] = phi(Int(m));

    PuiseuxPolynomial h_gamma;
    for (int fl = 0; fl <= exponent_bound; ++fl) {
      std::vector<Rat> classes;
      for (const auto& [cls, c0] : phis[fl]) classes.push_back(cls);
      for (const auto& [cls, c0] : phis[fl + 1])
        if (!phis[fl].count(cls)) classes.push_back(cls);
      for (const auto& cls : classes) {
        Rat beta = Rat(fl) + cls;
        if (beta >= Rat(exponent_bound)) continue;
        Int hi = phis[fl + 1].count(cls) ? phis[fl + 1][cls] : Int(0);
        Int lo = phis[fl].count(cls) ? phis[fl][cls] : Int(0);
        h_gamma.add(beta, hi - lo);
      }
    }
    // (1-t)^{s_gamma} * h_gamma, truncated below the bound.
    int sgn = (pair.n - 1 - cell.gamma.dim()) % 2 == 0 ? 1 : -1;
    for (int k = 0; k <= cell.s; ++k) {
      Int b = binomial(Int(cell.s), k);
      if (k % 2 == 1) b = -b;
      for (const auto& [e, v] : h_gamma.terms) {
        Rat exp = e + Rat(k);
        if (exp < Rat(exponent_bound)) total.add(exp, sgn * b * v);
      }
    }
  }
  return total;
}

}  // namespace newtmon::oracle
