#pragma once

#include "newtmon/frame.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

namespace newtmon {

// Inner-normal halfspace  <normal, x> >= offset.
struct Facet {
  IntVec normal;
  Int offset;
  bool operator<(const Facet& o) const {
    if (normal != o.normal) return lex_less(normal, o.normal);
    return offset < o.offset;
  }
};

// One face, recorded by the indices of the vertices and extreme rays on it.
struct FaceRec {
  std::vector<int> verts;
  std::vector<int> rays;
  int dim = -1;
};

namespace detail {

// Facet normals of a full-dimensional pointed cone spanned by `gens` in Z^s,
// by incremental insertion.  Candidate facets arising from horizon ridges are
// validated against all processed generators, which keeps degenerate
// (non-simplicial) insertions exact.
inline IntMatrix cone_facet_normals(const IntMatrix& gens, int s) {
  if (s == 0 || gens.empty()) return {};
  // Greedy independent subset, processed first.
  std::vector<int> order, rest;
  {
    IntMatrix picked;
    std::vector<bool> used(gens.size(), false);
    for (size_t i = 0; i < gens.size() && static_cast<int>(picked.size()) < s; ++i) {
      picked.push_back(gens[i]);
      if (rank_of(picked) == static_cast<int>(picked.size())) {
        order.push_back(static_cast<int>(i));
        used[i] = true;
      } else {
        picked.pop_back();
      }
    }
    if (static_cast<int>(picked.size()) != s)
      throw std::logic_error("cone_facet_normals: generators do not span");
    for (size_t i = 0; i < gens.size(); ++i)
      if (!used[i]) rest.push_back(static_cast<int>(i));
    order.insert(order.end(), rest.begin(), rest.end());
  }

  std::vector<IntVec> facets;
  auto push_unique = [&](const IntVec& nrm) {
    for (const auto& f : facets)
      if (f == nrm) return;
    facets.push_back(nrm);
  };

  // Facets of the initial simplicial cone.
  for (int k = 0; k < s; ++k) {
    IntMatrix others;
    for (int j = 0; j < s; ++j)
      if (j != k) others.push_back(gens[order[j]]);
    IntMatrix kern = kernel_basis(others, s);
    if (kern.size() != 1) throw std::logic_error("cone_facet_normals: bad simplex kernel");
    IntVec nrm = kern[0];
    if (dot(nrm, gens[order[k]]) < 0)
      nrm = vec_scale(-1, nrm);
    push_unique(nrm);
  }

  std::vector<int> processed(order.begin(), order.begin() + s);
  for (size_t step = s; step < order.size(); ++step) {
    const IntVec& g = gens[order[step]];
    std::vector<Int> val(facets.size());
    bool any_neg = false;
    for (size_t k = 0; k < facets.size(); ++k) {
      val[k] = dot(facets[k], g);
      if (val[k] < 0) any_neg = true;
    }
    if (!any_neg) {
      processed.push_back(order[step]);
      continue;
    }
    // Tight generator sets of the current facets, sorted for intersection.
    std::vector<std::vector<int>> tight(facets.size());
    for (size_t k = 0; k < facets.size(); ++k) {
      for (int gi : processed)
        if (dot(facets[k], gens[gi]) == 0) tight[k].push_back(gi);
      std::sort(tight[k].begin(), tight[k].end());
    }

    std::vector<IntVec> next;
    for (size_t k = 0; k < facets.size(); ++k)
      if (val[k] >= 0) next.push_back(facets[k]);
    size_t survivors = next.size();
    if (survivors == 0) throw std::logic_error("cone_facet_normals: cone not pointed");

    auto try_candidate = [&](const std::vector<int>& ridge) {
      IntMatrix span_rows;
      for (int gi : ridge) span_rows.push_back(gens[gi]);
      span_rows.push_back(g);
      if (rank_of(span_rows) != s - 1) return;
      IntMatrix kern = kernel_basis(span_rows, s);
      if (kern.size() != 1) return;
      IntVec nrm = kern[0];
      bool pos = false, neg = false;
      for (int gi : processed) {
        Int d = dot(nrm, gens[gi]);
        if (d > 0) pos = true;
        if (d < 0) neg = true;
      }
      if (pos && neg) return;
      if (neg) nrm = vec_scale(-1, nrm);
      for (const auto& f : next)
        if (f == nrm) return;
      next.push_back(nrm);
    };

    for (size_t f = 0; f < facets.size(); ++f) {
      if (val[f] >= 0) continue;
      for (size_t h = 0; h < facets.size(); ++h) {
        if (val[h] < 0) continue;
        std::vector<int> ridge;
        std::set_intersection(tight[f].begin(), tight[f].end(), tight[h].begin(),
                              tight[h].end(), std::back_inserter(ridge));
        try_candidate(ridge);
      }
    }
    processed.push_back(order[step]);
    facets = std::move(next);
    (void)survivors;
  }

  // Final validation over every generator.
  for (const auto& f : facets) {
    IntMatrix tight_rows;
    for (const auto& gv : gens) {
      Int d = dot(f, gv);
      if (d < 0) throw std::logic_error("cone_facet_normals: invalid facet survived");
      if (d == 0) tight_rows.push_back(gv);
    }
    if (rank_of(tight_rows) != s - 1)
      throw std::logic_error("cone_facet_normals: non-facet hyperplane survived");
  }
  std::sort(facets.begin(), facets.end(), [](const IntVec& a, const IntVec& b) {
    return lex_less(a, b);
  });
  // Pointedness of the cone == facet normals span the space.
  if (rank_of(facets) != s)
    throw std::logic_error("cone_facet_normals: cone has lineality");
  return facets;
}

}  // namespace detail

// A rational polyhedron  conv(vertices) + cone(recession rays)  with exact
// integer data: irredundant generators, ambient facets (when full-dimensional),
// an affine lattice frame, in-frame facets, and the full face lattice graded
// by dimension (the empty face has dim -1 and index 0).
class Polyhedron {
 public:
  Polyhedron() = default;

  static Polyhedron empty(int n) {
    Polyhedron p;
    p.n_ = n;
    p.dim_ = -1;
    p.faces_.push_back(FaceRec{{}, {}, -1});
    return p;
  }

  static Polyhedron hull(std::vector<IntVec> points, std::vector<IntVec> rays = {}) {
    Polyhedron p;
    if (points.empty() && !rays.empty())
      throw std::invalid_argument("convex_hull: rays without points");
    if (points.empty()) return empty(0);
    p.n_ = static_cast<int>(points[0].size());
    for (const auto& v : points)
      if (static_cast<int>(v.size()) != p.n_)
        throw std::invalid_argument("convex_hull: dimension mismatch");
    for (const auto& r : rays)
      if (static_cast<int>(r.size()) != p.n_ || is_zero(r))
        throw std::invalid_argument("convex_hull: bad ray");
    std::sort(points.begin(), points.end(), lex_less);
    points.erase(std::unique(points.begin(), points.end()), points.end());
    for (auto& r : rays) r = primitive(r);
    std::sort(rays.begin(), rays.end(), lex_less);
    rays.erase(std::unique(rays.begin(), rays.end()), rays.end());
    p.build(points, rays);
    return p;
  }

  static Polyhedron empty_like(const Polyhedron& other) { return empty(other.n_); }

  int ambient_dim() const { return n_; }
  int dim() const { return dim_; }
  bool is_empty() const { return dim_ < 0; }
  bool is_bounded() const { return rays_.empty(); }
  const std::vector<IntVec>& vertices() const { return verts_; }
  const std::vector<IntVec>& recession_rays() const { return rays_; }
  const std::vector<Facet>& facets() const {
    if (dim_ >= 0 && dim_ != n_)
      throw std::logic_error("ambient facets are only stored for full-dimensional polyhedra");
    return facets_;
  }
  const std::vector<Facet>& frame_facets() const { return frame_facets_; }
  const AffineLatticeFrame& frame() const { return frame_; }
  const std::vector<FaceRec>& faces() const { return faces_; }

  bool operator==(const Polyhedron& o) const {
    return n_ == o.n_ && verts_ == o.verts_ && rays_ == o.rays_;
  }
  bool operator!=(const Polyhedron& o) const { return !(*this == o); }

  // Face on which <u,.> attains its minimum.  u = 0 gives the whole set.
  Polyhedron supporting_face(const IntVec& u) const {
    if (static_cast<int>(u.size()) != n_)
      throw std::invalid_argument("supporting_face: dimension mismatch");
    if (is_empty()) return *this;
    for (const auto& r : rays_)
      if (dot(u, r) < 0)
        throw std::invalid_argument("supporting_face: unbounded below, no supporting face");
    Int best = dot(u, verts_[0]);
    for (const auto& v : verts_) best = std::min(best, dot(u, v));
    std::vector<IntVec> fv;
    for (const auto& v : verts_)
      if (dot(u, v) == best) fv.push_back(v);
    std::vector<IntVec> fr;
    for (const auto& r : rays_)
      if (dot(u, r) == 0) fr.push_back(r);
    return hull(fv, fr);
  }

  Int min_value(const IntVec& u) const {
    if (is_empty()) throw std::invalid_argument("min_value of empty polyhedron");
    for (const auto& r : rays_)
      if (dot(u, r) < 0) throw std::invalid_argument("min_value: unbounded below");
    Int best = dot(u, verts_[0]);
    for (const auto& v : verts_) best = std::min(best, dot(u, v));
    return best;
  }

  Int max_value(const IntVec& u) const {
    if (!is_bounded()) {
      for (const auto& r : rays_)
        if (dot(u, r) > 0) throw std::invalid_argument("max_value: unbounded above");
    }
    Int best = dot(u, verts_[0]);
    for (const auto& v : verts_) best = std::max(best, dot(u, v));
    return best;
  }

  // Geometric membership of a rational point.
  bool contains(const RatVec& x) const {
    if (is_empty()) return false;
    auto c = frame_.to_frame_rat(x);
    if (!c) return false;
    for (const auto& f : frame_facets_) {
      Rat s = 0;
      for (int i = 0; i < frame_.dim; ++i) s += Rat(f.normal[i]) * (*c)[i];
      if (s < Rat(f.offset)) return false;
    }
    return true;
  }

  bool contains(const IntVec& x) const { return contains(to_rat(x)); }

  // Index into faces() of the whole polyhedron.
  int top_face() const { return static_cast<int>(faces_.size()) - 1; }

  const FaceRec& face(int i) const { return faces_[i]; }
  int face_count() const { return static_cast<int>(faces_.size()); }

  bool face_leq(int a, int b) const {
    const FaceRec& fa = faces_[a];
    const FaceRec& fb = faces_[b];
    return std::includes(fb.verts.begin(), fb.verts.end(), fa.verts.begin(), fa.verts.end()) &&
           std::includes(fb.rays.begin(), fb.rays.end(), fa.rays.begin(), fa.rays.end());
  }

  Polyhedron face_polyhedron(int i) const {
    const FaceRec& f = faces_[i];
    if (f.dim < 0) return empty(n_);
    std::vector<IntVec> pts, rys;
    for (int v : f.verts) pts.push_back(verts_[v]);
    for (int r : f.rays) rys.push_back(rays_[r]);
    return hull(pts, rys);
  }

  // Index of the face with exactly this vertex set (bounded faces), or -1.
  int find_face(const std::vector<IntVec>& vset) const {
    std::vector<int> ids;
    for (const auto& v : vset) {
      auto it = std::lower_bound(verts_.begin(), verts_.end(), v, lex_less);
      if (it == verts_.end() || *it != v) return -1;
      ids.push_back(static_cast<int>(it - verts_.begin()));
    }
    std::sort(ids.begin(), ids.end());
    for (int i = 0; i < face_count(); ++i)
      if (faces_[i].rays.empty() && faces_[i].verts == ids) return i;
    return -1;
  }

  // Smallest face containing all the given points (which must lie in the
  // polyhedron); determined by the facets tight at every point.  Full-dim only.
  int smallest_face_containing(const std::vector<IntVec>& pts) const {
    if (dim_ != n_) throw std::logic_error("smallest_face_containing: need full-dim");
    if (pts.empty()) return 0;  // empty face
    std::vector<int> best;
    bool first = true;
    for (int k = 0; k < static_cast<int>(facets_.size()); ++k) {
      bool tight = true;
      for (const auto& p : pts)
        if (dot(facets_[k].normal, p) != facets_[k].offset) { tight = false; break; }
      if (tight) best.push_back(k);
      (void)first;
    }
    // Face = all vertices/rays tight on every facet in `best`.
    std::vector<int> fverts, frays;
    for (int i = 0; i < static_cast<int>(verts_.size()); ++i) {
      bool ok = true;
      for (int k : best)
        if (dot(facets_[k].normal, verts_[i]) != facets_[k].offset) { ok = false; break; }
      if (ok) fverts.push_back(i);
    }
    for (int i = 0; i < static_cast<int>(rays_.size()); ++i) {
      bool ok = true;
      for (int k : best)
        if (dot(facets_[k].normal, rays_[i]) != 0) { ok = false; break; }
      if (ok) frays.push_back(i);
    }
    for (int i = 0; i < face_count(); ++i)
      if (faces_[i].verts == fverts && faces_[i].rays == frays) return i;
    throw std::logic_error("smallest_face_containing: face not found");
  }

 private:
  void build(const std::vector<IntVec>& points, const std::vector<IntVec>& rays);

  int n_ = 0;
  int dim_ = -1;
  std::vector<IntVec> verts_;
  std::vector<IntVec> rays_;
  std::vector<Facet> facets_;        // ambient, only when dim_ == n_
  std::vector<Facet> frame_facets_;  // in frame coordinates (full-dim there)
  AffineLatticeFrame frame_;
  std::vector<FaceRec> faces_;       // sorted by (dim, verts, rays); faces_[0] = empty
};

inline void Polyhedron::build(const std::vector<IntVec>& points,
                              const std::vector<IntVec>& rays) {
  // Affine lattice frame of the span.
  if (static_cast<int>(points.size()) + static_cast<int>(rays.size()) > 0) {
    std::vector<IntVec> dirs(rays.begin(), rays.end());
    if (rank_of([&] {
          IntMatrix m = dirs;
          for (size_t i = 1; i < points.size(); ++i) m.push_back(vec_sub(points[i], points[0]));
          return m;
        }()) == n_) {
      frame_.ambient = n_;
      frame_.dim = n_;
      frame_.base = points[0];
      frame_.basis.clear();
      for (int i = 0; i < n_; ++i) frame_.basis.push_back(unit_vector(n_, i));
    } else {
      frame_ = lattice_frame(points, rays);
    }
  }
  dim_ = frame_.dim;

  // Generators in homogenized frame coordinates: points at height 1, rays at 0.
  int s = dim_ + 1;
  IntMatrix gens;
  std::vector<std::pair<bool, int>> gen_src;  // (is_point, original index)
  for (size_t i = 0; i < points.size(); ++i) {
    IntVec c = *frame_.to_frame(points[i]);
    IntVec h(s);
    h[0] = 1;
    for (int j = 0; j < dim_; ++j) h[j + 1] = c[j];
    gens.push_back(h);
    gen_src.push_back({true, static_cast<int>(i)});
  }
  for (size_t i = 0; i < rays.size(); ++i) {
    auto c = frame_.to_frame_rat(to_rat(vec_add(frame_.base, rays[i])));
    if (!c) throw std::logic_error("ray outside span");
    IntVec h(s, 0);
    for (int j = 0; j < dim_; ++j) {
      if (denominator((*c)[j]) != 1) throw std::logic_error("non-integral ray coordinate");
      h[j + 1] = numerator((*c)[j]);
    }
    gens.push_back(primitive(h));
    gen_src.push_back({false, static_cast<int>(i)});
  }

  IntMatrix cone_facets = detail::cone_facet_normals(gens, s);

  // Tight generator sets per cone facet.
  std::vector<std::vector<int>> tight(cone_facets.size());
  for (size_t k = 0; k < cone_facets.size(); ++k)
    for (size_t i = 0; i < gens.size(); ++i)
      if (dot(cone_facets[k], gens[i]) == 0) tight[k].push_back(static_cast<int>(i));

  // Extreme generators: tight facet normals span a hyperplane.
  std::vector<bool> extreme(gens.size(), false);
  for (size_t i = 0; i < gens.size(); ++i) {
    IntMatrix norms;
    for (size_t k = 0; k < cone_facets.size(); ++k)
      if (dot(cone_facets[k], gens[i]) == 0) norms.push_back(cone_facets[k]);
    extreme[i] = (rank_of(norms) == s - 1);
  }

  std::vector<int> vert_of_gen(gens.size(), -1), ray_of_gen(gens.size(), -1);
  for (size_t i = 0; i < gens.size(); ++i) {
    if (!extreme[i]) continue;
    if (gen_src[i].first) {
      vert_of_gen[i] = static_cast<int>(verts_.size());
      verts_.push_back(points[gen_src[i].second]);
    } else {
      ray_of_gen[i] = static_cast<int>(rays_.size());
      rays_.push_back(rays[gen_src[i].second]);
    }
  }

  // Face enumeration: closure of tight sets under intersection.
  std::set<std::vector<int>> seen;
  std::vector<std::vector<int>> queue;
  std::vector<int> full;
  for (size_t i = 0; i < gens.size(); ++i) full.push_back(static_cast<int>(i));
  seen.insert(full);
  queue.push_back(full);
  while (!queue.empty()) {
    std::vector<int> cur = queue.back();
    queue.pop_back();
    for (size_t k = 0; k < cone_facets.size(); ++k) {
      std::vector<int> inter;
      std::set_intersection(cur.begin(), cur.end(), tight[k].begin(), tight[k].end(),
                            std::back_inserter(inter));
      if (seen.insert(inter).second) queue.push_back(inter);
    }
  }

  for (const auto& gs : seen) {
    FaceRec f;
    bool has_point = false;
    for (int gi : gs) {
      if (gen_src[gi].first) has_point = true;
      if (vert_of_gen[gi] >= 0) f.verts.push_back(vert_of_gen[gi]);
      if (ray_of_gen[gi] >= 0) f.rays.push_back(ray_of_gen[gi]);
    }
    if (!has_point && !gs.empty()) continue;  // face at infinity
    if (gs.empty()) {
      f.dim = -1;
    } else {
      IntMatrix dirs;
      const IntVec& v0 = verts_.empty() ? points[gen_src[gs[0]].second]
                                        : verts_[f.verts.empty() ? 0 : f.verts[0]];
      for (int vi : f.verts) dirs.push_back(vec_sub(verts_[vi], verts_[f.verts[0]]));
      for (int ri : f.rays) dirs.push_back(rays_[ri]);
      f.dim = rank_of(dirs);
      (void)v0;
    }
    std::sort(f.verts.begin(), f.verts.end());
    std::sort(f.rays.begin(), f.rays.end());
    faces_.push_back(std::move(f));
  }
  // Make sure the empty face is present even when no facets exist (a point).
  if (std::none_of(faces_.begin(), faces_.end(),
                   [](const FaceRec& f) { return f.dim == -1; }))
    faces_.push_back(FaceRec{{}, {}, -1});
  std::sort(faces_.begin(), faces_.end(), [](const FaceRec& a, const FaceRec& b) {
    if (a.dim != b.dim) return a.dim < b.dim;
    if (a.verts != b.verts) return a.verts < b.verts;
    return a.rays < b.rays;
  });

  // Facets, in frame coordinates and (when full-dimensional) ambient ones.
  for (const auto& cf : cone_facets) {
    IntVec lin(cf.begin() + 1, cf.end());
    if (is_zero(lin)) continue;  // the height facet, not a facet of P
    frame_facets_.push_back(Facet{lin, -cf[0]});
  }
  std::sort(frame_facets_.begin(), frame_facets_.end());
  if (dim_ == n_) {
    for (const auto& f : frame_facets_) {
      // coordinates are x - base here, so shift the offset back
      facets_.push_back(Facet{f.normal, f.offset + dot(f.normal, frame_.base)});
    }
    std::sort(facets_.begin(), facets_.end());
  }
}

inline Polyhedron convex_hull(const std::vector<IntVec>& points,
                              const std::vector<IntVec>& rays = {}) {
  return Polyhedron::hull(points, rays);
}

inline Polyhedron minkowski_sum(const Polyhedron& a, const Polyhedron& b) {
  if (a.ambient_dim() != b.ambient_dim())
    throw std::invalid_argument("minkowski_sum: dimension mismatch");
  if (a.is_empty() || b.is_empty()) return Polyhedron::empty(a.ambient_dim());
  std::vector<IntVec> pts;
  for (const auto& p : a.vertices())
    for (const auto& q : b.vertices()) pts.push_back(vec_add(p, q));
  std::vector<IntVec> rays = a.recession_rays();
  rays.insert(rays.end(), b.recession_rays().begin(), b.recession_rays().end());
  return Polyhedron::hull(pts, rays);
}

// A vector in the relative interior of the normal cone of the given face:
// the sum of the primitive inner normals of all facets containing it.
inline IntVec relint_normal(const Polyhedron& p, const Polyhedron& face) {
  if (p.dim() != p.ambient_dim())
    throw std::logic_error("relint_normal: need a full-dimensional polyhedron");
  IntVec u = zero_vector(p.ambient_dim());
  for (const auto& f : p.facets()) {
    bool tight = true;
    for (const auto& v : face.vertices())
      if (dot(f.normal, v) != f.offset) { tight = false; break; }
    for (const auto& r : face.recession_rays())
      if (tight && dot(f.normal, r) != 0) tight = false;
    if (tight) u = vec_add(u, f.normal);
  }
  return u;
}

// Minkowski face decomposition: the faces of the summands matching a face of
// the sum, located through a relative-interior normal.
inline std::pair<Polyhedron, Polyhedron> face_decompose(const Polyhedron& sum,
                                                        const Polyhedron& face,
                                                        const Polyhedron& a,
                                                        const Polyhedron& b) {
  IntVec u = relint_normal(sum, face);
  return {a.supporting_face(u), b.supporting_face(u)};
}

}  // namespace newtmon
