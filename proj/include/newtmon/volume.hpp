#pragma once

#include "newtmon/polytope.hpp"

#include <functional>
#include <map>
#include <vector>

namespace newtmon {

namespace detail {

// Pulling triangulation of a face, working purely on the face lattice.
// Returns simplices as vertex-index tuples (indices into p.vertices()).
inline void pull_triangulate(const Polyhedron& p, int face_idx,
                             std::map<int, std::vector<std::vector<int>>>& memo) {
  if (memo.count(face_idx)) return;
  const FaceRec& f = p.face(face_idx);
  std::vector<std::vector<int>> out;
  if (f.dim <= 0) {
    if (f.dim == 0) out.push_back(f.verts);
    memo[face_idx] = out;
    return;
  }
  if (static_cast<int>(f.verts.size()) == f.dim + 1) {
    out.push_back(f.verts);
    memo[face_idx] = out;
    return;
  }
  int apex = f.verts[0];
  // Facets of this face inside the lattice: maximal proper subfaces.
  for (int g = 0; g < p.face_count(); ++g) {
    if (p.face(g).dim != f.dim - 1 || !p.face_leq(g, face_idx)) continue;
    bool has_apex =
        std::binary_search(p.face(g).verts.begin(), p.face(g).verts.end(), apex);
    if (has_apex) continue;
    pull_triangulate(p, g, memo);
    for (auto simplex : memo[g]) {
      simplex.push_back(apex);
      out.push_back(simplex);
    }
  }
  memo[face_idx] = out;
}

}  // namespace detail

// Normalized volume  d! * vol  of a bounded polytope with respect to the given
// frame lattice, d = frame.dim, by exact simplicial decomposition.
// Returns 0 when dim P < d; a point in a 0-dimensional frame gives 1.
inline Int normalized_volume(const Polyhedron& p, const AffineLatticeFrame& fr) {
  if (p.is_empty()) return 0;
  if (!p.is_bounded()) throw std::invalid_argument("normalized_volume: unbounded input");
  if (fr.dim == 0) return 1;
  if (p.dim() < fr.dim) return 0;
  if (p.dim() > fr.dim)
    throw std::invalid_argument("normalized_volume: polytope not contained in frame span");
  // Vertex coordinates in the frame.
  std::vector<IntVec> w;
  for (const auto& v : p.vertices()) {
    auto c = fr.to_frame(v);
    if (!c) throw std::invalid_argument("normalized_volume: vertex outside frame span");
    w.push_back(*c);
  }
  std::map<int, std::vector<std::vector<int>>> memo;
  detail::pull_triangulate(p, p.top_face(), memo);
  Int total = 0;
  for (const auto& simplex : memo[p.top_face()]) {
    IntMatrix m;
    for (size_t i = 1; i < simplex.size(); ++i)
      m.push_back(vec_sub(w[simplex[i]], w[simplex[0]]));
    Int d = int_det(m);
    total += (d < 0) ? -d : d;
  }
  return total;
}

inline Int normalized_volume(const Polyhedron& p) {
  if (p.is_empty()) return 0;
  return normalized_volume(p, p.frame());
}

// Normalized mixed volume of d = frame.dim polytopes, by the inclusion-
// exclusion formula  (1/d!) sum_k (-1)^{d-k} sum_{|I|=k} Vol_Z(sum_{i in I}).
// d = 0 returns 1; any empty argument with d >= 1 returns 0.
inline Int mixed_volume(const std::vector<Polyhedron>& deltas, const AffineLatticeFrame& fr) {
  int d = fr.dim;
  if (static_cast<int>(deltas.size()) != d)
    throw std::invalid_argument("mixed_volume: argument count must equal frame dimension");
  if (d == 0) return 1;
  for (const auto& p : deltas)
    if (p.is_empty()) return 0;
  Int acc = 0;
  for (unsigned mask = 1; mask < (1u << d); ++mask) {
    Polyhedron s;
    bool first = true;
    int k = 0;
    for (int i = 0; i < d; ++i) {
      if (!(mask & (1u << i))) continue;
      ++k;
      s = first ? deltas[i] : minkowski_sum(s, deltas[i]);
      first = false;
    }
    Int vol = normalized_volume(s, fr);
    acc += ((d - k) % 2 == 0) ? vol : -vol;
  }
  Int df = factorial(d);
  if (acc % df != 0) throw std::logic_error("mixed_volume: inclusion-exclusion sum not divisible");
  Int mv = acc / df;
  if (mv < 0) throw std::logic_error("mixed_volume: negative result");
  return mv;
}

// All lattice points of the dilate m*P, enumerated in the frame of P by a
// box scan with facet filtering on the innermost coordinate.
// m = 0 gives {origin} for nonempty P.
inline std::vector<IntVec> lattice_points(const Polyhedron& p, const Int& m) {
  if (p.is_empty()) return {};
  if (!p.is_bounded()) throw std::invalid_argument("lattice_points: unbounded input");
  if (m < 0) throw std::invalid_argument("lattice_points: negative dilation");
  if (m == 0) return {zero_vector(p.ambient_dim())};
  const AffineLatticeFrame& fr = p.frame();
  int d = fr.dim;
  if (d == 0) return {vec_scale(m, p.vertices()[0])};
  // Frame coordinates of the vertices, dilated by m.
  std::vector<IntVec> w;
  for (const auto& v : p.vertices()) w.push_back(vec_scale(m, *fr.to_frame(v)));
  IntVec lo = w[0], hi = w[0];
  for (const auto& c : w)
    for (int j = 0; j < d; ++j) {
      lo[j] = std::min(lo[j], c[j]);
      hi[j] = std::max(hi[j], c[j]);
    }
  const auto& facets = p.frame_facets();
  std::vector<IntVec> out;
  IntVec cur(d, 0);
  // Depth-first scan; the last coordinate interval comes from the facets.
  std::function<void(int)> scan = [&](int depth) {
    if (depth == d - 1) {
      Int a = lo[depth], b = hi[depth];
      for (const auto& f : facets) {
        // f.normal . c >= m*f.offset, c = (cur[0..d-2], t)
        Int partial = 0;
        for (int j = 0; j < d - 1; ++j) partial += f.normal[j] * cur[j];
        Int rhs = m * f.offset - partial;
        const Int& coef = f.normal[d - 1];
        if (coef == 0) {
          if (rhs > 0) return;  // prefix infeasible
        } else if (coef > 0) {
          a = std::max(a, ceil_div(rhs, coef));
        } else {
          b = std::min(b, floor_div(rhs, coef));
        }
      }
      for (Int t = a; t <= b; ++t) {
        cur[d - 1] = t;
        IntVec amb = vec_scale(m, fr.base);
        for (int i = 0; i < d; ++i)
          for (int j = 0; j < fr.ambient; ++j) amb[j] += cur[i] * fr.basis[i][j];
        out.push_back(amb);
      }
      return;
    }
    for (Int t = lo[depth]; t <= hi[depth]; ++t) {
      cur[depth] = t;
      scan(depth + 1);
    }
  };
  scan(0);
  std::sort(out.begin(), out.end(), lex_less);
  return out;
}

inline Int count_lattice_points(const Polyhedron& p, const Int& m) {
  return Int(lattice_points(p, m).size());
}

}  // namespace newtmon
