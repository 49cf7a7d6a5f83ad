#pragma once

#include "newtmon/polytope.hpp"
#include "newtmon/poly_ring.hpp"

#include <map>
#include <optional>
#include <vector>

namespace newtmon {

// A lattice polyhedral subdivision of a full-dimensional polytope: cells are
// closed under taking faces, the intersection of two cells is a face of both,
// and the empty cell (dim -1) is cells[0].
struct Subdivision {
  Polyhedron ambient;

  struct Cell {
    std::vector<IntVec> verts;  // sorted lex
    int dim = -1;
    int sigma = 0;  // index of the smallest ambient face containing the cell
  };
  std::vector<Cell> cells;            // sorted by (dim, verts)
  std::vector<std::vector<bool>> leq; // containment (a face of b)
  std::vector<int> maximal_cells;

  int cell_count() const { return static_cast<int>(cells.size()); }

  int find_cell(std::vector<IntVec> verts) const {
    std::sort(verts.begin(), verts.end(), lex_less);
    for (int i = 0; i < cell_count(); ++i)
      if (cells[i].verts == verts) return i;
    return -1;
  }

  // Cells contained in the given ambient face (geometric test on vertices).
  std::vector<int> cells_in_face(int face_idx) const;
};

namespace detail {

inline bool vertex_subset(const std::vector<IntVec>& a, const std::vector<IntVec>& b) {
  // both sorted lex
  return std::includes(b.begin(), b.end(), a.begin(), a.end(),
                       [](const IntVec& x, const IntVec& y) { return lex_less(x, y); });
}

// Assemble a Subdivision from its maximal cells (given by vertex sets).
inline Subdivision assemble_subdivision(const Polyhedron& ambient,
                                        const std::vector<std::vector<IntVec>>& max_cells) {
  Subdivision s;
  s.ambient = ambient;
  std::map<std::vector<IntVec>, int> dims;  // cell verts -> dim
  for (const auto& mc : max_cells) {
    Polyhedron cp = convex_hull(mc);
    for (int i = 0; i < cp.face_count(); ++i) {
      std::vector<IntVec> fv;
      for (int vi : cp.face(i).verts) fv.push_back(cp.vertices()[vi]);
      std::sort(fv.begin(), fv.end(), lex_less);
      dims[fv] = cp.face(i).dim;
    }
  }
  for (const auto& [verts, dim] : dims) {
    Subdivision::Cell c;
    c.verts = verts;
    c.dim = dim;
    s.cells.push_back(std::move(c));
  }
  std::sort(s.cells.begin(), s.cells.end(), [](const auto& a, const auto& b) {
    if (a.dim != b.dim) return a.dim < b.dim;
    return a.verts < b.verts;
  });
  int m = s.cell_count();
  s.leq.assign(m, std::vector<bool>(m, false));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      s.leq[i][j] = vertex_subset(s.cells[i].verts, s.cells[j].verts);
  for (int i = 0; i < m; ++i) {
    bool is_max = true;
    for (int j = 0; j < m && is_max; ++j)
      if (j != i && s.leq[i][j]) is_max = false;
    if (is_max) s.maximal_cells.push_back(i);
  }
  // sigma: smallest ambient face containing the cell.
  for (auto& c : s.cells) {
    if (c.dim < 0) {
      c.sigma = 0;  // empty face of the ambient polytope
      continue;
    }
    c.sigma = ambient.smallest_face_containing(c.verts);
  }
  return s;
}

}  // namespace detail

inline std::vector<int> Subdivision::cells_in_face(int face_idx) const {
  const FaceRec& f = ambient.face(face_idx);
  std::vector<int> out;
  if (f.dim < 0) return {0};
  // A lattice point lies in the face iff it makes every facet through the
  // face tight (and lies in the polytope; cell vertices do).
  std::vector<int> active;
  for (int k = 0; k < static_cast<int>(ambient.facets().size()); ++k) {
    bool tight = true;
    for (int vi : f.verts)
      if (dot(ambient.facets()[k].normal, ambient.vertices()[vi]) != ambient.facets()[k].offset) {
        tight = false;
        break;
      }
    if (tight) active.push_back(k);
  }
  for (int i = 0; i < cell_count(); ++i) {
    bool inside = true;
    for (const auto& v : cells[i].verts) {
      for (int k : active)
        if (dot(ambient.facets()[k].normal, v) != ambient.facets()[k].offset) {
          inside = false;
          break;
        }
      if (!inside) break;
    }
    if (inside) out.push_back(i);
  }
  return out;
}

// A continuous piecewise Q-affine function on a subdivided polytope, one
// affine piece per maximal cell.
struct PiecewiseAffine {
  Subdivision domain;

  struct Piece {
    std::vector<Facet> cell_facets;  // ambient facets of the (full-dim) cell
    RatVec grad;
    Rat constant = 0;
  };
  std::vector<Piece> pieces;  // parallel to domain.maximal_cells

  Rat eval(const RatVec& x) const {
    for (const auto& p : pieces) {
      bool inside = true;
      for (const auto& f : p.cell_facets) {
        Rat s = -Rat(f.offset);
        for (size_t i = 0; i < x.size(); ++i) s += Rat(f.normal[i]) * x[i];
        if (s < 0) { inside = false; break; }
      }
      if (inside) return dot_qq(p.grad, x) + p.constant;
    }
    throw std::logic_error("piecewise affine function: point outside every cell");
  }

  Rat eval_lattice(const IntVec& v) const { return eval(to_rat(v)); }

  // Whether the function takes integer values at every cell vertex.
  bool vertex_integral() const {
    for (const auto& c : domain.cells)
      for (const auto& v : c.verts)
        if (denominator(eval_lattice(v)) != 1) return false;
    return true;
  }

  // The affine form of the function on a set contained in one maximal cell:
  // weight of a lattice point v of the m-fold dilate is  <grad, v> + m*const.
  const Piece& piece_containing(const std::vector<IntVec>& verts) const {
    for (size_t pi = 0; pi < pieces.size(); ++pi) {
      const auto& cell =
          domain.cells[domain.maximal_cells[pi]];
      Polyhedron cp = convex_hull(cell.verts);
      bool all = true;
      for (const auto& v : verts)
        if (!cp.contains(v)) { all = false; break; }
      if (all) return pieces[pi];
    }
    throw std::logic_error("piece_containing: set not inside any maximal cell");
  }
};

// Regular subdivision of P from integer weights on a point set S containing
// the vertices of P: project the bounded faces of the upper hull
// conv{(v, s) : v in S, s >= w(v)}, and read the convex piecewise affine
// function off the lower facets.
inline std::pair<Subdivision, PiecewiseAffine> regular_subdivision(
    const Polyhedron& P, const std::vector<IntVec>& S_pts,
    const std::map<IntVec, Int>& weights) {
  int n = P.ambient_dim();
  if (P.dim() != n)
    throw std::invalid_argument("regular_subdivision: ambient polytope must be full-dimensional");
  for (const auto& v : P.vertices()) {
    if (std::find(S_pts.begin(), S_pts.end(), v) == S_pts.end())
      throw std::invalid_argument("regular_subdivision: S must contain the vertices of P");
  }
  std::vector<IntVec> lifted;
  for (const auto& v : S_pts) {
    if (!P.contains(v))
      throw std::invalid_argument("regular_subdivision: S must be contained in P");
    auto it = weights.find(v);
    if (it == weights.end()) throw std::invalid_argument("regular_subdivision: missing weight");
    IntVec h = v;
    h.push_back(it->second);
    lifted.push_back(h);
  }
  Polyhedron uh = convex_hull(lifted, {unit_vector(n + 1, n)});

  // Bounded facets carry the affine pieces; their projections are the
  // maximal cells.
  std::vector<std::vector<IntVec>> max_cells;
  std::vector<PiecewiseAffine::Piece> pieces;
  for (const auto& fc : uh.facets()) {
    if (fc.normal[n] <= 0) continue;  // vertical or upper facet
    // Facet: <u, x> + w*s = b on the facet, s = (b - <u,x>)/w.
    std::vector<IntVec> proj;
    for (const auto& vtx : uh.vertices())
      if (dot(fc.normal, vtx) == fc.offset) {
        proj.push_back(IntVec(vtx.begin(), vtx.end() - 1));
      }
    std::sort(proj.begin(), proj.end(), lex_less);
    PiecewiseAffine::Piece piece;
    piece.grad.resize(n);
    for (int i = 0; i < n; ++i) piece.grad[i] = -Rat(fc.normal[i]) / Rat(fc.normal[n]);
    piece.constant = Rat(fc.offset) / Rat(fc.normal[n]);
    max_cells.push_back(proj);
    pieces.push_back(std::move(piece));
  }

  Subdivision sub = detail::assemble_subdivision(P, max_cells);
  PiecewiseAffine nu;
  nu.domain = sub;
  // pieces must parallel sub.maximal_cells; match by vertex set
  nu.pieces.resize(sub.maximal_cells.size());
  for (size_t i = 0; i < max_cells.size(); ++i) {
    int ci = sub.find_cell(max_cells[i]);
    auto it = std::find(sub.maximal_cells.begin(), sub.maximal_cells.end(), ci);
    if (ci < 0 || it == sub.maximal_cells.end())
      throw std::logic_error("regular_subdivision: cell bookkeeping failure");
    size_t slot = it - sub.maximal_cells.begin();
    Polyhedron cp = convex_hull(max_cells[i]);
    nu.pieces[slot].cell_facets = cp.facets();
    nu.pieces[slot].grad = pieces[i].grad;
    nu.pieces[slot].constant = pieces[i].constant;
  }
  return {sub, nu};
}

}  // namespace newtmon
