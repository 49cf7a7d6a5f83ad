#pragma once

#include "newtmon/subdivision.hpp"
#include "newtmon/volume.hpp"

#include <map>
#include <optional>
#include <tuple>
#include <vector>

namespace newtmon {

// A graded poset with containment relation, extracted from a polytope's face
// lattice or from the cells of a subdivision.
struct FacePoset {
  std::vector<int> dim;
  std::vector<std::vector<bool>> leq;
  int size() const { return static_cast<int>(dim.size()); }
};

inline FacePoset poset_of_polytope(const Polyhedron& p) {
  FacePoset ps;
  int m = p.face_count();
  ps.dim.resize(m);
  ps.leq.assign(m, std::vector<bool>(m, false));
  for (int i = 0; i < m; ++i) {
    ps.dim[i] = p.face(i).dim;
    for (int j = 0; j < m; ++j) ps.leq[i][j] = p.face_leq(i, j);
  }
  return ps;
}

inline FacePoset poset_of_subdivision(const Subdivision& s) {
  FacePoset ps;
  int m = s.cell_count();
  ps.dim.resize(m);
  ps.leq = s.leq;
  for (int i = 0; i < m; ++i) ps.dim[i] = s.cells[i].dim;
  return ps;
}

// Stanley's g-polynomial of a face-poset interval [lo,hi] (or its reversal),
// by the defining recursion.  The recursion determines the coefficients up to
// degree floor((d-1)/2) by top-coefficient read-off; the remaining identities
// are asserted, which certifies the interval is Eulerian.
class GPolyCalculator {
 public:
  explicit GPolyCalculator(const FacePoset& ps) : ps_(ps) {}

  UniPoly g(int lo, int hi, bool reversed) {
    if (!ps_.leq[lo][hi]) throw std::invalid_argument("g_poly: not an interval");
    if (lo == hi) return UniPoly::constant(1);
    auto key = std::make_tuple(lo, hi, reversed);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    int d = ps_.dim[hi] - ps_.dim[lo];
    UniPoly H;
    for (int f = 0; f < ps_.size(); ++f) {
      if (!(ps_.leq[lo][f] && ps_.leq[f][hi])) continue;
      if (!reversed) {
        if (f == hi) continue;
        H = H + t_minus_one_pow(ps_.dim[hi] - ps_.dim[f]) * g(lo, f, false);
      } else {
        if (f == lo) continue;
        H = H + t_minus_one_pow(ps_.dim[f] - ps_.dim[lo]) * g(f, hi, true);
      }
    }
    UniPoly out;
    for (int i = 0; i <= (d - 1) / 2; ++i) out.add(i, H.coeff(d - i));
    // Residual identity  t^d g(1/t) - g(t) = H.
    if (!(out.reverse(d) - out == H))
      throw std::invalid_argument("g_poly: face poset interval is not Eulerian");
    memo_[key] = out;
    return out;
  }

 private:
  const FacePoset& ps_;
  std::map<std::tuple<int, int, bool>, UniPoly> memo_;
};

inline UniPoly g_poly(const FacePoset& ps, int lo, int hi, bool reversed = false) {
  GPolyCalculator calc(ps);
  return calc.g(lo, hi, reversed);
}

// h- and local h-polynomials of cells in a subdivision, sharing g-caches.
class SubdivisionCalculator {
 public:
  explicit SubdivisionCalculator(const Subdivision& s)
      : s_(s),
        cell_poset_(poset_of_subdivision(s)),
        amb_poset_(poset_of_polytope(s.ambient)),
        gcell_(cell_poset_),
        gamb_(amb_poset_) {}

  const Subdivision& subdivision() const { return s_; }

  // h(LK_S(F); t), with the link taken inside the cells listed in `within`
  // (all cells by default) and the ambient dimension `amb_dim`.
  UniPoly h_link_within(int cell, const std::vector<int>& within, int amb_dim) {
    UniPoly R;
    for (int f : within) {
      if (!cell_poset_.leq[cell][f]) continue;
      R = R + gcell_.g(cell, f, false) * t_minus_one_pow(amb_dim - cell_poset_.dim[f]);
    }
    int span = amb_dim - cell_poset_.dim[cell];
    if (R.degree() > span)
      throw std::invalid_argument("h_link: subdivision is not a valid polyhedral subdivision");
    return R.reverse(span);
  }

  UniPoly h_link(int cell) {
    std::vector<int> all(cell_poset_.size());
    for (int i = 0; i < cell_poset_.size(); ++i) all[i] = i;
    return h_link_within(cell, all, s_.ambient.dim());
  }

  // Local h-polynomial l_P(S, F; t).
  UniPoly local_h(int cell) {
    int sigma = s_.cells[cell].sigma;
    int top = s_.ambient.top_face();
    UniPoly acc;
    for (int q = 0; q < amb_poset_.size(); ++q) {
      if (!amb_poset_.leq[sigma][q]) continue;
      std::vector<int> within = s_.cells_in_face(q);
      UniPoly h = h_link_within(cell, within, amb_poset_.dim[q]);
      UniPoly term = h * gamb_.g(q, top, true);
      int codim = s_.ambient.dim() - amb_poset_.dim[q];
      acc = acc + ((codim % 2 == 0) ? term : term.scale(-1));
    }
    return acc;
  }

 private:
  const Subdivision& s_;
  FacePoset cell_poset_;
  FacePoset amb_poset_;
  GPolyCalculator gcell_;
  GPolyCalculator gamb_;
};

inline UniPoly h_link(const Subdivision& s, const std::vector<IntVec>& cell_verts) {
  int c = s.find_cell(cell_verts);
  if (c < 0) throw std::invalid_argument("h_link: not a cell of the subdivision");
  return SubdivisionCalculator(s).h_link(c);
}

inline UniPoly local_h(const Subdivision& s, const std::vector<IntVec>& cell_verts) {
  int c = s.find_cell(cell_verts);
  if (c < 0) throw std::invalid_argument("local_h: not a cell of the subdivision");
  return SubdivisionCalculator(s).local_h(c);
}

// ---- lambda-weighted Ehrhart theory ----

namespace detail {

struct WeightEvaluator {
  const PiecewiseAffine* nu;
  const PiecewiseAffine::Piece* affine = nullptr;  // fast path: one cell

  static WeightEvaluator for_polytope(const Polyhedron& p, const PiecewiseAffine& nu) {
    WeightEvaluator w;
    w.nu = &nu;
    if (!p.is_empty()) {
      try {
        w.affine = &nu.piece_containing(p.vertices());
      } catch (const std::logic_error&) {
        w.affine = nullptr;  // spans several cells; evaluate pointwise
      }
    }
    return w;
  }

  // m * nu(v/m) for a lattice point v of the m-fold dilate.
  Rat weight(const IntVec& v, const Int& m) const {
    if (affine) return dot_qi(affine->grad, v) + affine->constant * Rat(m);
    return Rat(m) * nu->eval(vec_div(v, m));
  }
};

}  // namespace detail

// Counts of lattice points of the m-fold dilate of P split by the root-of-
// unity class of exp(2 pi i m nu(v/m)); m = 0 contributes the origin with
// the trivial class.
inline std::map<RootOfUnity, Int> phi_classes(const Polyhedron& P, const PiecewiseAffine& nu,
                                              const Int& m) {
  std::map<RootOfUnity, Int> out;
  if (P.is_empty()) return out;
  if (m == 0) {
    out[RootOfUnity(0, 1)] = 1;
    return out;
  }
  auto w = detail::WeightEvaluator::for_polytope(P, nu);
  for (const auto& v : lattice_points(P, m)) {
    Rat wt = w.weight(v, m);
    out[RootOfUnity::from_fraction(wt)] += 1;
  }
  return out;
}

// The lambda-weighted Ehrhart count phi_lambda(P, nu; m).
inline Int phi_weighted(const Polyhedron& P, const PiecewiseAffine& nu,
                        const RootOfUnity& lambda, const Int& m) {
  auto classes = phi_classes(P, nu, m);
  auto it = classes.find(lambda);
  return it == classes.end() ? Int(0) : it->second;
}

// All weighted h*-polynomials of (P, nu) at once.  The generating function
// numerator is read off the first dim P + 1 counts and then re-verified
// against the direct counts at m = D+1, ..., 2D+2; a mismatch certifies that
// nu is not vertex-integral (or the weighted count is not a polynomial).
inline std::map<RootOfUnity, UniPoly> hstar_all(const Polyhedron& P, const PiecewiseAffine& nu) {
  std::map<RootOfUnity, UniPoly> out;
  if (P.is_empty()) {
    out[RootOfUnity(0, 1)] = UniPoly::constant(1);
    return out;
  }
  int D = P.dim();
  std::vector<std::map<RootOfUnity, Int>> phi(2 * D + 3);
  std::vector<RootOfUnity> classes;
  for (int m = 0; m <= 2 * D + 2; ++m) {
    phi[m] = phi_classes(P, nu, Int(m));
    for (const auto& [cls, cnt] : phi[m])
      if (std::find(classes.begin(), classes.end(), cls) == classes.end())
        classes.push_back(cls);
  }
  UniPoly denom = one_minus_t_pow(D + 1);
  for (const auto& cls : classes) {
    UniPoly series;
    for (int m = 0; m <= D; ++m) {
      auto it = phi[m].find(cls);
      if (it != phi[m].end()) series.add(m, it->second);
    }
    UniPoly prod = series * denom;
    UniPoly h;
    for (const auto& [d, v] : prod.c)
      if (d <= D) h.add(d, v);
    // Polynomiality guard.
    for (int m = D + 1; m <= 2 * D + 2; ++m) {
      Int predicted = 0;
      for (const auto& [k, v] : h.c) predicted += v * binomial(Int(m - k + D), D);
      auto it = phi[m].find(cls);
      Int observed = (it == phi[m].end()) ? Int(0) : it->second;
      if (predicted != observed)
        throw hypothesis_error("hstar: nu not vertex-integral / polynomiality violated");
    }
    if (!h.is_zero()) out[cls] = h;
  }
  if (!out.count(RootOfUnity(0, 1))) out[RootOfUnity(0, 1)] = UniPoly();
  return out;
}

// lambda-weighted h*-polynomial; empty P gives 1 for lambda = 1 and 0 else.
inline UniPoly hstar(const Polyhedron& P, const PiecewiseAffine& nu, const RootOfUnity& lambda) {
  auto all = hstar_all(P, nu);
  auto it = all.find(lambda);
  return it == all.end() ? UniPoly() : it->second;
}

// lambda-local weighted h*-polynomial:
//   l*(P) = sum_{Q <= P} (-1)^{dim P - dim Q} h*(Q) g([Q,P]*; u),
// the sum running over all faces including the empty one and P itself.
inline UniPoly lstar(const Polyhedron& P, const PiecewiseAffine& nu, const RootOfUnity& lambda) {
  if (P.is_empty()) return UniPoly::constant(lambda.is_one() ? 1 : 0);
  FacePoset ps = poset_of_polytope(P);
  GPolyCalculator g(ps);
  int top = P.top_face();
  UniPoly acc;
  for (int q = 0; q < P.face_count(); ++q) {
    UniPoly h = hstar(P.face_polyhedron(q), nu, lambda);
    if (h.is_zero()) continue;
    UniPoly term = h * g.g(q, top, true);
    int codim = P.dim() - P.face(q).dim;
    acc = acc + ((codim % 2 == 0) ? term : term.scale(-1));
  }
  return acc;
}

// Limit mixed h*-polynomial:
//   sum_{F in S} v^{dim F + 1} l*(F, nu|_F; u v^{-1}) h(LK_S(F); uv).
inline LaurentBiPoly hstar_mixed(const Polyhedron& P, const PiecewiseAffine& nu,
                                 const Subdivision& S, const RootOfUnity& lambda) {
  (void)P;
  SubdivisionCalculator calc(S);
  LaurentBiPoly acc;
  for (int ci = 0; ci < S.cell_count(); ++ci) {
    Polyhedron F = S.cells[ci].dim < 0 ? Polyhedron::empty(S.ambient.ambient_dim())
                                       : convex_hull(S.cells[ci].verts);
    UniPoly ls = lstar(F, nu, lambda);
    if (ls.is_zero()) continue;
    UniPoly h = calc.h_link(ci);
    LaurentBiPoly term = LaurentBiPoly::from_uni_u_over_v(ls) * LaurentBiPoly::from_uni_uv(h);
    acc = acc + term.shift(0, S.cells[ci].dim + 1);
  }
  if (acc.has_negative_degrees())
    throw hypothesis_error("hstar_mixed: negative degrees survive, input violates hypotheses");
  return acc;
}

// Local limit mixed h*-polynomial: same shape with the local h-polynomial.
inline LaurentBiPoly lstar_mixed(const Polyhedron& P, const PiecewiseAffine& nu,
                                 const Subdivision& S, const RootOfUnity& lambda) {
  (void)P;
  SubdivisionCalculator calc(S);
  LaurentBiPoly acc;
  for (int ci = 0; ci < S.cell_count(); ++ci) {
    Polyhedron F = S.cells[ci].dim < 0 ? Polyhedron::empty(S.ambient.ambient_dim())
                                       : convex_hull(S.cells[ci].verts);
    UniPoly ls = lstar(F, nu, lambda);
    if (ls.is_zero()) continue;
    UniPoly l = calc.local_h(ci);
    LaurentBiPoly term = LaurentBiPoly::from_uni_u_over_v(ls) * LaurentBiPoly::from_uni_uv(l);
    acc = acc + term.shift(0, S.cells[ci].dim + 1);
  }
  if (acc.has_negative_degrees())
    throw hypothesis_error("lstar_mixed: negative degrees survive, input violates hypotheses");
  return acc;
}

}  // namespace newtmon
