#pragma once

#include "newtmon/polytope.hpp"
#include "newtmon/sparse_poly.hpp"
#include "newtmon/volume.hpp"

#include <optional>
#include <vector>

namespace newtmon {

// Newton polyhedron of g: local mode gives conv(supp g) + R^n_+, infinity
// mode gives conv({0} u supp g).
inline Polyhedron newton_polyhedron(const SparsePolynomial& g, Mode mode) {
  std::vector<IntVec> pts = g.support();
  if (mode == Mode::local) {
    std::vector<IntVec> rays;
    for (int i = 0; i < g.n; ++i) rays.push_back(unit_vector(g.n, i));
    return convex_hull(pts, rays);
  }
  pts.push_back(zero_vector(g.n));
  return convex_hull(pts);
}

// A meromorphic pair f = P/Q with cached Newton data Gamma(P), Gamma(Q) and
// Gamma(f) = Gamma(P) + Gamma(Q).
struct MeroPair {
  int n = 0;
  SparsePolynomial P, Q;
  Mode mode = Mode::local;
  Polyhedron gP, gQ, gF;
};

inline MeroPair make_pair(const SparsePolynomial& P, const SparsePolynomial& Q,
                          Mode mode = Mode::local) {
  if (P.n != Q.n) throw std::invalid_argument("P and Q must share the ambient arity");
  MeroPair m;
  m.n = P.n;
  m.P = P;
  m.Q = Q;
  m.mode = mode;
  m.gP = newton_polyhedron(P, mode);
  m.gQ = newton_polyhedron(Q, mode);
  m.gF = minkowski_sum(m.gP, m.gQ);
  return m;
}

// One (S, i) stratum term of the zeta formula: a facet of Gamma(f)^S together
// with its conormal, lattice distances and mixed-volume weight.  All geometric
// members live in the compressed coordinates of R^S.
struct FacetDatum {
  std::vector<int> S;      // 0-based coordinate subset, sorted
  Polyhedron facet;        // facet of Gamma(f)^S
  Polyhedron faceP, faceQ; // gamma_i^S(P), gamma_i^S(Q)
  IntVec alpha;            // primitive conormal: inner (local) / outer (infinity)
  Int dP, dQ, d;           // lattice distances, d = dP - dQ
  Int v;                   // mixed-volume weight
};

namespace detail {

// Restriction of a Newton polyhedron to R^S computed on supports.
inline std::optional<Polyhedron> restrict_newton(const SparsePolynomial& g,
                                                 const std::vector<int>& S, Mode mode) {
  auto gs = g.restrict(S);
  if (mode == Mode::local) {
    if (!gs) return std::nullopt;
    return newton_polyhedron(*gs, mode);
  }
  // At infinity Gamma_oo(g)^S always contains the origin.
  if (!gs) return convex_hull({zero_vector(static_cast<int>(S.size()))});
  return newton_polyhedron(*gs, mode);
}

inline Int mv_weight(const Polyhedron& faceP, const Polyhedron& faceQ, const IntVec& alpha,
                     int card) {
  // Sum of mixed volumes Vol(faceP x k, faceQ x (card-1-k)) in the lattice
  // frame of the conormal hyperplane.
  AffineLatticeFrame fr = hyperplane_frame(alpha);
  // Translate both faces into the hyperplane through the origin.
  auto translate = [&](const Polyhedron& f) {
    std::vector<IntVec> pts;
    for (const auto& v : f.vertices()) pts.push_back(vec_sub(v, f.vertices()[0]));
    return convex_hull(pts);
  };
  Polyhedron tp = translate(faceP), tq = translate(faceQ);
  Int v = 0;
  for (int k = 0; k <= card - 1; ++k) {
    std::vector<Polyhedron> args;
    for (int i = 0; i < k; ++i) args.push_back(tp);
    for (int i = 0; i < card - 1 - k; ++i) args.push_back(tq);
    v += mixed_volume(args, fr);
  }
  return v;
}

}  // namespace detail

// Facet data of the stratum S: one datum per compact facet of Gamma_+(f)^S
// with strictly positive conormal (local mode) or per facet of
// Gamma_oo(f)^S avoiding the origin, with outer conormal (infinity mode).
inline std::vector<FacetDatum> facet_data(const MeroPair& pair, const std::vector<int>& S) {
  if (S.empty()) throw std::invalid_argument("facet_data: empty stratum");
  int card = static_cast<int>(S.size());
  auto A = detail::restrict_newton(pair.P, S, pair.mode);
  auto B = detail::restrict_newton(pair.Q, S, pair.mode);
  std::vector<FacetDatum> out;
  if (!A || !B) return out;  // empty stratum contributes the factor 1
  Polyhedron C = minkowski_sum(*A, *B);
  if (C.dim() < card) {
    // Gamma_oo(f)^S can degenerate to {0}; it then has no admissible facet.
    return out;
  }
  for (const auto& f : C.facets()) {
    FacetDatum datum;
    datum.S = S;
    if (pair.mode == Mode::local) {
      bool strictly_positive = true;
      for (const auto& x : f.normal)
        if (x <= 0) { strictly_positive = false; break; }
      if (!strictly_positive) continue;  // unbounded facet
      datum.alpha = f.normal;
      datum.faceP = A->supporting_face(datum.alpha);
      datum.faceQ = B->supporting_face(datum.alpha);
      datum.dP = A->min_value(datum.alpha);
      datum.dQ = B->min_value(datum.alpha);
    } else {
      if (f.offset == 0) continue;  // facet through the origin
      datum.alpha = vec_scale(-1, f.normal);  // outer conormal
      IntVec inner = f.normal;
      datum.faceP = A->supporting_face(inner);
      datum.faceQ = B->supporting_face(inner);
      datum.dP = A->max_value(datum.alpha);
      datum.dQ = B->max_value(datum.alpha);
    }
    datum.d = datum.dP - datum.dQ;
    datum.facet = minkowski_sum(datum.faceP, datum.faceQ);
    datum.v = detail::mv_weight(datum.faceP, datum.faceQ, datum.alpha, card);
    out.push_back(std::move(datum));
  }
  return out;
}

inline std::vector<std::vector<int>> all_strata(int n) {
  std::vector<std::vector<int>> out;
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    std::vector<int> S;
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) S.push_back(i);
    out.push_back(S);
  }
  return out;
}

inline std::vector<FacetDatum> facet_data_all(const MeroPair& pair) {
  std::vector<FacetDatum> out;
  for (const auto& S : all_strata(pair.n)) {
    auto d = facet_data(pair, S);
    out.insert(out.end(), d.begin(), d.end());
  }
  return out;
}

struct ContainmentResult {
  bool ok = false;
  IntVec witness;  // violating direction when !ok
};

// Decides  min<u, Gamma_+(P)>  >  min<u, Gamma_+(Q)>  for every u in the
// interior of R^n_+.  The support-function difference is linear on each cone
// of the dual fan of Gamma_+(f), so it suffices to require >= 0 on every ray
// of the fan and > 0 at the sum of the primitive ray generators of each cone
// whose sample point has all coordinates positive.
inline ContainmentResult is_properly_contained(const MeroPair& pair) {
  if (pair.mode != Mode::local)
    throw std::invalid_argument("is_properly_contained: defined for local mode");
  const Polyhedron& F = pair.gF;
  auto diff = [&](const IntVec& u) { return pair.gP.min_value(u) - pair.gQ.min_value(u); };
  for (const auto& f : F.facets()) {
    if (diff(f.normal) < 0) return ContainmentResult{false, f.normal};
  }
  for (int i = 0; i < F.face_count(); ++i) {
    if (F.face(i).dim < 0) continue;
    IntVec b = zero_vector(pair.n);
    for (const auto& f : F.facets()) {
      bool tight = true;
      for (int vi : F.face(i).verts)
        if (dot(f.normal, F.vertices()[vi]) != f.offset) { tight = false; break; }
      for (int ri : F.face(i).rays)
        if (tight && dot(f.normal, F.recession_rays()[ri]) != 0) tight = false;
      if (tight) b = vec_add(b, f.normal);
    }
    bool positive = true;
    for (const auto& x : b)
      if (x <= 0) { positive = false; break; }
    if (positive && diff(b) <= 0) return ContainmentResult{false, b};
  }
  return ContainmentResult{true, {}};
}

}  // namespace newtmon
