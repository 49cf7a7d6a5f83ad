#pragma once

#include "newtmon/cayley.hpp"
#include "newtmon/ehrhart.hpp"

#include <vector>

namespace newtmon {

// The region K = conv(Gamma_+(Q) \ Gamma_+(P) closure) with the piecewise
// affine nu (0 on the Newton boundary hull of P, 1 on the boundary of Q) and
// the subdivision S_nu whose maximal cells are the Cayley boxes of the
// compact facets plus conv(Gamma_P) when full-dimensional.
struct WeightedRegion {
  Polyhedron K;
  PiecewiseAffine nu;  // domain is S_nu
  std::vector<CayleyCell> cells;

  const Subdivision& subdivision() const { return nu.domain; }
};

inline WeightedRegion build_weighted_region(const MeroPair& pair) {
  if (pair.mode != Mode::local)
    throw std::invalid_argument("build_weighted_region: local mode only");
  if (!is_convenient(pair.P) || !is_convenient(pair.Q))
    throw hypothesis_error("build_weighted_region: P and Q must be convenient");
  auto contained = is_properly_contained(pair);
  if (!contained.ok)
    throw hypothesis_error(
        "build_weighted_region: proper containment fails in direction " +
        vec_str(contained.witness));

  WeightedRegion region;
  region.cells = cayley_cells(pair);

  std::vector<IntVec> kpts = pair.gP.vertices();
  kpts.insert(kpts.end(), pair.gQ.vertices().begin(), pair.gQ.vertices().end());
  region.K = convex_hull(kpts);
  if (region.K.dim() != pair.n)
    throw hypothesis_error("build_weighted_region: K is not full-dimensional");

  // Maximal cells: the boxes of the compact facets, plus conv(Gamma_P) if it
  // is n-dimensional.
  std::vector<std::vector<IntVec>> max_cells;
  std::vector<const CayleyCell*> facet_cells;
  for (const auto& c : region.cells) {
    if (c.gamma.dim() != pair.n - 1) continue;
    max_cells.push_back(c.box.vertices());
    facet_cells.push_back(&c);
  }
  Polyhedron gammaP_hull = convex_hull(pair.gP.vertices());
  if (gammaP_hull.dim() == pair.n) max_cells.push_back(gammaP_hull.vertices());

  Subdivision sub = detail::assemble_subdivision(region.K, max_cells);

  // Sanity: every box lies in K; the maximal cells tile K.
  for (const auto& c : region.cells)
    for (const auto& v : c.box.vertices())
      if (!region.K.contains(v))
        throw hypothesis_error("build_weighted_region: a Cayley box escapes K");
  {
    Int voltotal = 0;
    for (const auto& mc : max_cells) voltotal += normalized_volume(convex_hull(mc));
    if (voltotal != normalized_volume(region.K))
      throw hypothesis_error("build_weighted_region: maximal cells do not tile K");
  }

  PiecewiseAffine nu;
  nu.domain = sub;
  nu.pieces.resize(sub.maximal_cells.size());
  for (size_t i = 0; i < max_cells.size(); ++i) {
    int ci = sub.find_cell(max_cells[i]);
    auto it = std::find(sub.maximal_cells.begin(), sub.maximal_cells.end(), ci);
    if (ci < 0 || it == sub.maximal_cells.end())
      throw std::logic_error("build_weighted_region: lost a maximal cell");
    size_t slot = it - sub.maximal_cells.begin();
    Polyhedron cp = convex_hull(max_cells[i]);
    auto& piece = nu.pieces[slot];
    piece.cell_facets = cp.facets();
    piece.grad.assign(pair.n, Rat(0));
    piece.constant = 0;
    if (i < facet_cells.size()) {
      // nu = 1 - height/d on the box.
      const CayleyCell& c = *facet_cells[i];
      for (int j = 0; j < pair.n; ++j) piece.grad[j] = -Rat(c.alpha[j]) / Rat(c.d);
      piece.constant = Rat(1) + Rat(dot(c.alpha, c.q0)) / Rat(c.d);
    }
    // else: the conv(Gamma_P) cell carries nu = 0.
  }
  // Continuity and 0/1 vertex values.
  for (size_t i = 0; i < sub.maximal_cells.size(); ++i) {
    const auto& cell = sub.cells[sub.maximal_cells[i]];
    for (const auto& v : cell.verts) {
      Rat val = dot_qi(nu.pieces[i].grad, v) + nu.pieces[i].constant;
      if (val != nu.eval_lattice(v) || denominator(val) != 1 || (val != 0 && val != 1))
        throw hypothesis_error("build_weighted_region: nu is not a continuous 0/1 weight");
    }
  }
  region.nu = std::move(nu);
  return region;
}

}  // namespace newtmon
