#pragma once

#include "newtmon/region.hpp"
#include "newtmon/zeta.hpp"

#include <map>
#include <set>
#include <string>
#include <vector>

namespace newtmon {

// Equivariant Hodge-Deligne polynomial E_lambda(F_0; u, v) with the Hodge
// number accessor h^{p,q} of the middle cohomology.
struct EHDPolynomial {
  int n = 0;
  LaurentBiPoly E;

  Int h(int p, int q) const {
    Int c = E.coeff(p, q);
    return (n % 2 == 1) ? c : -c;  // (-1)^{n-1} * coefficient
  }
  Int weight_dim(int w) const {
    // dim GR^W_w = sum_{p+q=w} h^{p,q}
    Int s = 0;
    for (const auto& [k, v] : E.c)
      if (k.first + k.second == w) s += h(k.first, k.second);
    return s;
  }
  Int total_mass() const {
    Int s = 0;
    for (const auto& [k, v] : E.c) s += h(k.first, k.second);
    return s;
  }
};

struct JordanCounts {
  std::map<int, Int> blocks;  // size k -> J_{k,lambda}, zero entries omitted
  Int total_dimension() const {
    Int s = 0;
    for (const auto& [k, j] : blocks) s += Int(k) * j;
    return s;
  }
  Int at(int k) const {
    auto it = blocks.find(k);
    return it == blocks.end() ? Int(0) : it->second;
  }
  bool operator==(const JordanCounts& o) const { return blocks == o.blocks; }
};

// Decomposition of a palindromic polynomial of span d into the symmetric
// unimodal basis  t^i + t^{i+1} + ... + t^{d-i}:  ltilde_i = l_i - l_{i-1}.
// Negative ltilde certifies a unimodality violation.
inline UniPoly tilde_l(const UniPoly& l, int span) {
  if (l.is_zero()) return UniPoly();
  if (!l.is_palindromic(span))
    throw std::invalid_argument("tilde_l: polynomial is not palindromic for the given span");
  UniPoly out;
  for (int i = 0; i <= span / 2; ++i) {
    Int li = l.coeff(i) - (i > 0 ? l.coeff(i - 1) : Int(0));
    if (li < 0)
      throw hypothesis_error("tilde_l: unimodality violated");
    out.add(i, li);
  }
  return out;
}

// Engine around one meromorphic pair: builds the weighted region once and
// serves E_lambda, Jordan data and the reduced spectrum off it.  All methods
// record the names of internal cross-checks that passed.
class SpectrumEngine {
 public:
  explicit SpectrumEngine(const MeroPair& pair)
      : pair_(pair), region_(build_weighted_region(pair)) {}

  const WeightedRegion& region() const { return region_; }
  const std::vector<CayleyCell>& cells() const { return region_.cells; }
  const std::vector<std::string>& checks() const { return checks_; }

  // Least common multiple of the cell lattice distances; every eigenvalue
  // lambda != 1 with nonzero data has order dividing it.
  Int lambda_order_bound() const {
    Int l = 1;
    for (const auto& c : region_.cells) l = lcm(l, c.d);
    return l;
  }

  // Every nontrivial class of order dividing lcm{d_gamma}.
  std::vector<RootOfUnity> all_lambdas() const {
    Int L = lambda_order_bound();
    std::vector<RootOfUnity> out;
    for (Int k = 1; k < L; ++k) out.push_back(RootOfUnity(k, L));
    return out;
  }

  EHDPolynomial e_lambda(const RootOfUnity& lambda) {
    if (lambda.is_one())
      throw std::invalid_argument("e_lambda: lambda = 1 is unsupported");
    auto it = e_cache_.find(lambda);
    if (it != e_cache_.end()) return it->second;
    LaurentBiPoly ls = lstar_mixed_cached(lambda);
    EHDPolynomial e;
    e.n = pair_.n;
    LaurentBiPoly numer = (pair_.n % 2 == 1) ? ls : ls.scale(-1);  // (-1)^{n-1}
    e.E = numer.divide_by_uv();
    note("e_lambda:uv_divisibility");
    for (const auto& [k, v] : e.E.c) {
      if (k.first < 0 || k.first > pair_.n - 1 || k.second < 0 || k.second > pair_.n - 1)
        throw hypothesis_error("e_lambda: support escapes [0,n-1]^2");
      if (e.h(k.first, k.second) < 0)
        throw hypothesis_error("e_lambda: negative Hodge number, hypotheses violated");
      if (e.h(k.first, k.second) != e.h(pair_.n - 1 - k.second, pair_.n - 1 - k.first))
        throw hypothesis_error("e_lambda: Hodge symmetry violated");
    }
    note("e_lambda:hodge_symmetry");
    e_cache_[lambda] = e;
    return e;
  }

  // Jordan block counts for lambda != 1, computed along two routes:
  //   path A assembles sum_gamma u^{dim box + 1} l*(box; 1) ltilde(u^2)
  //   path B reads the weight-graded dimensions off E_lambda.
  JordanCounts jordan_counts(const RootOfUnity& lambda) {
    if (lambda.is_one())
      throw std::invalid_argument("jordan_counts: lambda = 1 is unsupported");
    const Subdivision& S = region_.subdivision();
    SubdivisionCalculator calc(S);
    UniPoly rhs;
    for (const auto& c : region_.cells) {
      UniPoly ls = lstar_box(c, lambda);
      Int ls1 = ls.eval_one();
      if (ls1 == 0) continue;
      int ci = S.find_cell(c.box.vertices());
      if (ci < 0)
        throw hypothesis_error("jordan_counts: a Cayley box is not a cell of S_nu");
      UniPoly l = calc.local_h(ci);
      int span = pair_.n - 1 - c.gamma.dim();
      UniPoly lt = tilde_l(l, span);
      // u^{dim box + 1} * ls(1) * ltilde(u^2)
      for (const auto& [deg, coeff] : lt.c)
        rhs.add(c.box.dim() + 1 + 2 * deg, coeff * ls1);
    }
    JordanCounts a;
    for (const auto& [deg, coeff] : rhs.c) {
      int k = deg - 2;  // coefficient of u^{k+2} is J_{n-k}
      if (k < 0 || k > pair_.n - 1)
        throw hypothesis_error("jordan_counts: block size out of range");
      if (coeff < 0) throw hypothesis_error("jordan_counts: negative block count");
      if (coeff != 0) a.blocks[pair_.n - k] = coeff;
    }
    // Path B: J_k = dim GR^W_{n-k} - dim GR^W_{n-k-2}.
    EHDPolynomial e = e_lambda(lambda);
    JordanCounts b;
    for (int k = 1; k <= pair_.n; ++k) {
      Int j = e.weight_dim(pair_.n - k) - e.weight_dim(pair_.n - k - 2);
      if (j < 0) throw hypothesis_error("jordan_counts: negative weight difference");
      if (j != 0) b.blocks[k] = j;
    }
    if (!(a == b))
      throw hypothesis_error("jordan_counts: local-h path and weight path disagree");
    note("jordan:paths_agree");
    Int mult = multiplicity(pair_, lambda);
    if (a.total_dimension() != mult)
      throw hypothesis_error("jordan_counts: sum k*J_k != multiplicity");
    note("jordan:dimension_bookkeeping");
    return a;
  }

  // Largest and second-largest block counts from the interior-face census.
  std::pair<Int, Int> jordan_extremes(const RootOfUnity& lambda) {
    if (lambda.is_one())
      throw std::invalid_argument("jordan_extremes: lambda = 1 is unsupported");
    Int jn = 0, jn1 = 0;
    for (const auto& c : region_.cells) {
      if (c.gamma.dim() == 0) {
        const IntVec& q = c.gamma.vertices()[0];
        bool interior = true;
        for (const auto& x : q)
          if (x <= 0) { interior = false; break; }
        if (interior && c.d % lambda.order() == 0) jn += 1;
      } else if (c.gamma.dim() == 1) {
        // relint(gamma) inside the open orthant: test the midpoint doubled.
        IntVec mid = vec_add(c.gamma.vertices()[0], c.gamma.vertices()[1]);
        bool interior = true;
        for (const auto& x : mid)
          if (x <= 0) { interior = false; break; }
        if (!interior) continue;
        const Int& e = c.d;
        if (e % lambda.order() != 0) continue;
        Int k = lambda.k * (e / lambda.order());
        Int count = 0;
        for (const auto& v : relint_points(c)) {
          Int h = c.height(v);
          if (h == k || h == e - k) ++count;
        }
        jn1 += count;
      }
    }
    // Cross-check against the full Jordan computation.
    JordanCounts jc = jordan_counts(lambda);
    if (jn != jc.at(pair_.n) || (pair_.n >= 2 && jn1 != jc.at(pair_.n - 1)))
      throw hypothesis_error("jordan_extremes: census disagrees with jordan_counts");
    note("jordan_extremes:consistent");
    return {jn, jn1};
  }

  // Reduced Hodge spectrum via the closed form
  //   sum_gamma (-1)^{n-1-dim gamma} sum_{c in (0,1)} t^{c-1} (1-t)^{m_gamma}
  //     h*_{lambda(c)}(box_gamma, nu; t).
  PuiseuxPolynomial reduced_spectrum() {
    PuiseuxPolynomial sp;
    for (const auto& c : region_.cells) {
      int sign = (pair_.n - 1 - c.gamma.dim()) % 2 == 0 ? 1 : -1;
      UniPoly binom = one_minus_t_pow(c.m);
      auto hs = hstar_box_all(c);
      for (const auto& [cls, h] : hs) {
        if (cls.is_one()) continue;
        UniPoly prod = h * binom;
        Rat base = cls.fraction() - 1;  // c - 1
        for (const auto& [deg, coeff] : prod.c)
          sp.add(base + Rat(deg), sign * coeff);
      }
    }
    // Support / integrality / symmetry assertions.
    for (const auto& [e, v] : sp.terms) {
      if (e <= 0 || e >= Rat(pair_.n) || denominator(e) == 1)
        throw hypothesis_error("reduced_spectrum: support escapes (0,n) \\ Z");
    }
    if (!(sp.reflect(Rat(pair_.n)) == sp))
      throw hypothesis_error("reduced_spectrum: symmetry sp(t) != t^n sp(1/t)");
    note("spectrum:symmetry");
    // Mass per eigenvalue class equals the multiplicity.
    std::map<RootOfUnity, Int> mass;
    for (const auto& [e, v] : sp.terms) mass[RootOfUnity::from_fraction(e)] += v;
    for (const auto& [cls, m] : mass)
      if (m != multiplicity(pair_, cls))
        throw hypothesis_error("reduced_spectrum: class mass != multiplicity");
    note("spectrum:mass_equals_multiplicity");
    return sp;
  }

  // Spectrum read off the E_lambda Hodge pieces:  the coefficient of t^alpha
  // is sum_q h^{floor(alpha), q} of lambda(alpha).
  PuiseuxPolynomial spectrum_from_hodge() {
    PuiseuxPolynomial sp;
    for (const auto& lambda : all_lambdas()) {
      EHDPolynomial e = e_lambda(lambda);
      for (int p = 0; p <= pair_.n - 1; ++p) {
        Int dim = 0;
        for (int q = 0; q <= pair_.n - 1; ++q) dim += e.h(p, q);
        if (dim != 0) sp.add(Rat(p) + lambda.fraction(), dim);
      }
    }
    return sp;
  }

 private:
  void note(const std::string& name) {
    for (const auto& c : checks_)
      if (c == name) return;
    checks_.push_back(name);
  }

  std::vector<IntVec> relint_points(const CayleyCell& c) {
    // Lattice points strictly inside the box: all frame facet inequalities strict.
    std::vector<IntVec> out;
    const auto& fr = c.box.frame();
    for (const auto& v : lattice_points(c.box, 1)) {
      auto coords = fr.to_frame(v);
      bool strict = true;
      for (const auto& f : c.box.frame_facets())
        if (dot(f.normal, *coords) == f.offset) { strict = false; break; }
      if (strict) out.push_back(v);
    }
    return out;
  }

  std::map<RootOfUnity, UniPoly>& hstar_box_all(const CayleyCell& c) {
    auto key = c.box.vertices();
    auto it = hstar_cache_.find(key);
    if (it != hstar_cache_.end()) return it->second;
    return hstar_cache_[key] = hstar_all(c.box, region_.nu);
  }

  UniPoly lstar_box(const CayleyCell& c, const RootOfUnity& lambda) {
    // lstar of the box with h* values cached by face vertex set.
    const Polyhedron& P = c.box;
    FacePoset ps = poset_of_polytope(P);
    GPolyCalculator g(ps);
    int top = P.top_face();
    UniPoly acc;
    for (int q = 0; q < P.face_count(); ++q) {
      Polyhedron face = P.face_polyhedron(q);
      UniPoly h;
      if (face.is_empty()) {
        h = UniPoly::constant(lambda.is_one() ? 1 : 0);
      } else {
        auto key = face.vertices();
        auto it = hstar_cache_.find(key);
        if (it == hstar_cache_.end())
          it = hstar_cache_.emplace(key, hstar_all(face, region_.nu)).first;
        auto jt = it->second.find(lambda);
        if (jt != it->second.end()) h = jt->second;
      }
      if (h.is_zero()) continue;
      UniPoly term = h * g.g(q, top, true);
      int codim = P.dim() - P.face(q).dim;
      acc = acc + ((codim % 2 == 0) ? term : term.scale(-1));
    }
    return acc;
  }

  LaurentBiPoly lstar_mixed_cached(const RootOfUnity& lambda) {
    const Subdivision& S = region_.subdivision();
    if (!subcalc_) subcalc_.emplace(S);
    LaurentBiPoly acc;
    for (int ci = 0; ci < S.cell_count(); ++ci) {
      UniPoly ls;
      if (S.cells[ci].dim < 0) {
        ls = UniPoly::constant(lambda.is_one() ? 1 : 0);
      } else {
        // Locate the Cayley cell with this box when available (cheap reuse),
        // otherwise compute l* of the cell polytope directly.
        CayleyCell tmp;
        tmp.box = convex_hull(S.cells[ci].verts);
        ls = lstar_box(tmp, lambda);
      }
      if (ls.is_zero()) continue;
      if (!localh_cache_.count(ci)) localh_cache_[ci] = subcalc_->local_h(ci);
      LaurentBiPoly term = LaurentBiPoly::from_uni_u_over_v(ls) *
                           LaurentBiPoly::from_uni_uv(localh_cache_[ci]);
      acc = acc + term.shift(0, S.cells[ci].dim + 1);
    }
    if (acc.has_negative_degrees())
      throw hypothesis_error("lstar_mixed: negative degrees survive");
    return acc;
  }

  MeroPair pair_;
  WeightedRegion region_;
  std::map<RootOfUnity, EHDPolynomial> e_cache_;
  std::map<std::vector<IntVec>, std::map<RootOfUnity, UniPoly>> hstar_cache_;
  std::map<int, UniPoly> localh_cache_;
  std::optional<SubdivisionCalculator> subcalc_;
  std::vector<std::string> checks_;
};

// Free-function forms of the headline operations.
inline EHDPolynomial e_lambda(const MeroPair& pair, const RootOfUnity& lambda) {
  return SpectrumEngine(pair).e_lambda(lambda);
}
inline JordanCounts jordan_counts(const MeroPair& pair, const RootOfUnity& lambda) {
  return SpectrumEngine(pair).jordan_counts(lambda);
}
inline std::pair<Int, Int> jordan_extremes(const MeroPair& pair, const RootOfUnity& lambda) {
  return SpectrumEngine(pair).jordan_extremes(lambda);
}
inline PuiseuxPolynomial reduced_spectrum(const MeroPair& pair) {
  return SpectrumEngine(pair).reduced_spectrum();
}

}  // namespace newtmon
