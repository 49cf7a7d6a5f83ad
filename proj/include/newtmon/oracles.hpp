#pragma once

// Brute-force reference implementations used by the test suite.  They must
// not share formula paths with the engine: no includes of the hull, volume,
// newton or zeta machinery.  Geometry here is done from scratch on generator
// point sets via exhaustive hyperplane enumeration.

#include "newtmon/cyclotomic.hpp"
#include "newtmon/linalg.hpp"
#include "newtmon/sparse_poly.hpp"

#include <map>
#include <vector>

namespace newtmon::oracle {

// Halfspace description of conv(gens), computed by checking every hyperplane
// spanned by an affinely independent subset against all generators.
struct BruteHull {
  std::vector<IntVec> gens;
  int n = 0;
  int dim = -1;
  IntVec base;
  IntMatrix hull_equations;  // a with a.(x - base) = 0 on the hull
  // Facet inequalities within the affine hull: a.(x - base) >= 0.
  IntMatrix ineqs;

  explicit BruteHull(std::vector<IntVec> g) : gens(std::move(g)) {
    if (gens.empty()) return;
    n = static_cast<int>(gens[0].size());
    base = gens[0];
    IntMatrix dirs;
    for (size_t i = 1; i < gens.size(); ++i) dirs.push_back(vec_sub(gens[i], base));
    dim = rank_of(dirs);
    hull_equations = kernel_basis(dirs, n);
    if (dim == 0) return;
    // Every facet hyperplane of the hull is spanned by dim of the generators.
    std::vector<int> idx(dim);
    std::vector<int> comb;
    std::function<void(int, int)> rec = [&](int start, int need) {
      if (need == 0) {
        IntMatrix rows;
        for (size_t k = 1; k < comb.size(); ++k)
          rows.push_back(vec_sub(gens[comb[k]], gens[comb[0]]));
        for (const auto& eq : hull_equations) rows.push_back(eq);
        IntMatrix kern = kernel_basis(rows, n);
        if (kern.size() != 1) return;  // not a hyperplane within the hull
        IntVec a = kern[0];
        Int c = dot(a, gens[comb[0]]);
        bool pos = false, neg = false;
        for (const auto& g2 : gens) {
          Int v = dot(a, g2) - c;
          if (v > 0) pos = true;
          if (v < 0) neg = true;
        }
        if (pos && neg) return;
        if (neg) { a = vec_scale(-1, a); c = -c; }
        IntVec stored = a;
        stored.push_back(c - dot(a, base));  // offset relative to base
        for (const auto& have : ineqs)
          if (have == stored) return;
        ineqs.push_back(stored);
        return;
      }
      for (int i = start; i <= static_cast<int>(gens.size()) - need; ++i) {
        comb.push_back(i);
        rec(i + 1, need - 1);
        comb.pop_back();
      }
    };
    rec(0, dim);
  }

  // Membership of x in m * conv(gens).
  bool contains_dilated(const IntVec& x, const Int& m) const {
    if (gens.empty()) return false;
    IntVec rel = vec_sub(x, vec_scale(m, base));
    for (const auto& eq : hull_equations)
      if (dot(eq, rel) != 0) return false;
    for (const auto& iq : ineqs) {
      IntVec a(iq.begin(), iq.end() - 1);
      Int off = iq.back();
      if (dot(a, rel) < m * off) return false;
    }
    return true;
  }

  std::vector<IntVec> dilated_lattice_points(const Int& m) const {
    std::vector<IntVec> out;
    if (gens.empty()) return out;
    if (m == 0) {
      out.push_back(zero_vector(n));
      return out;
    }
    IntVec lo = vec_scale(m, gens[0]), hi = lo;
    for (const auto& g2 : gens)
      for (int j = 0; j < n; ++j) {
        lo[j] = std::min(lo[j], Int(m * g2[j]));
        hi[j] = std::max(hi[j], Int(m * g2[j]));
      }
    // Combined constraint list (equations as two inequalities) relative to
    // m*base, used to clamp the innermost coordinate per scanline.
    IntMatrix cons;
    std::vector<Int> rhs;
    for (const auto& eq : hull_equations) {
      cons.push_back(eq);
      rhs.push_back(0);
      cons.push_back(vec_scale(-1, eq));
      rhs.push_back(0);
    }
    for (const auto& iq : ineqs) {
      cons.push_back(IntVec(iq.begin(), iq.end() - 1));
      rhs.push_back(m * iq.back());
    }
    IntVec mbase = vec_scale(m, base);
    IntVec cur(n);
    std::function<void(int)> rec = [&](int depth) {
      if (depth == n - 1) {
        Int a = lo[depth], b = hi[depth];
        for (size_t k = 0; k < cons.size() && a <= b; ++k) {
          Int partial = 0;
          for (int j = 0; j < n - 1; ++j) partial += cons[k][j] * (cur[j] - mbase[j]);
          Int r = rhs[k] - partial + cons[k][n - 1] * mbase[n - 1];
          const Int& coef = cons[k][n - 1];
          if (coef == 0) {
            if (partial < rhs[k]) return;
          } else if (coef > 0) {
            a = std::max(a, ceil_div(r, coef));
          } else {
            b = std::min(b, floor_div(r, coef));
          }
        }
        for (Int t = a; t <= b; ++t) {
          cur[depth] = t;
          out.push_back(cur);
        }
        return;
      }
      for (Int t = lo[depth]; t <= hi[depth]; ++t) {
        cur[depth] = t;
        rec(depth + 1);
      }
    };
    rec(0);
    return out;
  }
};

// Normalized volume via the Ehrhart leading coefficient: interpolate
// |m conv(gens) cap Z^d| for m = 0..d and return the d-th finite difference.
inline Int volume_by_dilation(const std::vector<IntVec>& gens) {
  BruteHull hull(gens);
  int d = hull.dim;
  if (d <= 0) return d == 0 ? 1 : 0;
  std::vector<Int> counts;
  for (int m = 0; m <= d; ++m)
    counts.push_back(Int(hull.dilated_lattice_points(Int(m)).size()));
  for (int step = 0; step < d; ++step)
    for (int i = static_cast<int>(counts.size()) - 1; i > step; --i)
      counts[i] -= counts[i - 1];
  return counts[d];
}

// Normalized mixed volume via polarization: interpolate the polynomial
// lambda |-> Vol_Z(lambda_1 D_1 + ... + lambda_d D_d) on the grid {0..d}^d
// and extract the multilinear coefficient, divided by (d-1)! ... the
// normalization works out so that equal arguments reproduce Vol_Z.
inline Int mixed_volume_by_interpolation(const std::vector<std::vector<IntVec>>& deltas) {
  int d = static_cast<int>(deltas.size());
  if (d == 0) return 1;
  // Volumes on the grid.
  std::map<std::vector<int>, Int> vol;
  std::vector<int> lam(d, 0);
  std::function<void(int)> fill = [&](int idx) {
    if (idx == d) {
      // Point set generating  sum lambda_i Delta_i.
      std::vector<IntVec> pts{zero_vector(static_cast<int>(deltas[0][0].size()))};
      for (int i = 0; i < d; ++i) {
        if (lam[i] == 0) continue;
        std::vector<IntVec> next;
        for (const auto& p : pts)
          for (const auto& q : deltas[i]) next.push_back(vec_add(p, vec_scale(lam[i], q)));
        std::sort(next.begin(), next.end(), lex_less);
        next.erase(std::unique(next.begin(), next.end()), next.end());
        pts = std::move(next);
      }
      // d-dimensional volume: degenerate sums count as zero.
      BruteHull h(pts);
      vol[lam] = (h.dim < d) ? Int(0) : volume_by_dilation(pts);
      return;
    }
    for (int v = 0; v <= d; ++v) {
      lam[idx] = v;
      fill(idx + 1);
    }
  };
  fill(0);
  // Tensor-product change of basis to monomial coefficients, one axis at a
  // time, using the inverse Vandermonde on nodes 0..d.
  RatMatrix vander(d + 1, RatVec(d + 1));
  for (int i = 0; i <= d; ++i) {
    Rat p = 1;
    for (int j = 0; j <= d; ++j) {
      vander[i][j] = p;
      p *= i;
    }
  }
  // Invert by solving V X = I column by column.
  RatMatrix vinv(d + 1, RatVec(d + 1, Rat(0)));
  for (int col = 0; col <= d; ++col) {
    RatVec e(d + 1, Rat(0));
    e[col] = 1;
    auto x = solve_linear_system(vander, e);
    for (int i = 0; i <= d; ++i) vinv[i][col] = (*x)[i];
  }
  std::map<std::vector<int>, Rat> coef;
  for (const auto& [k, v] : vol) coef[k] = Rat(v);
  for (int axis = 0; axis < d; ++axis) {
    std::map<std::vector<int>, Rat> next;
    // group by all-but-axis key
    std::map<std::vector<int>, std::vector<Rat>> grouped;
    for (const auto& [k, v] : coef) {
      std::vector<int> rest = k;
      int pos = rest[axis];
      rest[axis] = -1;
      auto& slot = grouped[rest];
      if (slot.empty()) slot.assign(d + 1, Rat(0));
      slot[pos] = v;
    }
    for (const auto& [rest, values] : grouped) {
      for (int i = 0; i <= d; ++i) {
        Rat acc = 0;
        for (int j = 0; j <= d; ++j) acc += vinv[i][j] * values[j];
        std::vector<int> k = rest;
        k[axis] = i;
        next[k] = acc;
      }
    }
    coef = std::move(next);
  }
  Rat multilinear = coef[std::vector<int>(d, 1)];
  // Vol_Z(sum lambda_i D_i) = d! vol; the multilinear monomial coefficient of
  // vol is d! * V_classical, and the normalized mixed volume is d! * V.
  Rat mv = multilinear / Rat(factorial(d));
  if (denominator(mv) != 1)
    throw std::logic_error("mixed_volume_by_interpolation: non-integral result");
  return numerator(mv);
}

// Independent 2-variable evaluation of the local zeta formula by direct
// staircase arithmetic on the supports, without the hull machinery.
inline CyclotomicProduct zeta_staircase_2d(const SparsePolynomial& P, const SparsePolynomial& Q) {
  if (P.n != 2 || Q.n != 2) throw std::invalid_argument("zeta_staircase_2d: need n = 2");
  CyclotomicProduct z;
  auto supp_P = P.support();
  auto supp_Q = Q.support();

  // One-variable strata: the minimal pure power of the axis variable.
  for (int axis = 0; axis < 2; ++axis) {
    Int mp = -1, mq = -1;
    for (const auto& e : supp_P)
      if (e[1 - axis] == 0 && (mp < 0 || e[axis] < mp)) mp = e[axis];
    for (const auto& e : supp_Q)
      if (e[1 - axis] == 0 && (mq < 0 || e[axis] < mq)) mq = e[axis];
    if (mp < 0 || mq < 0) continue;  // empty stratum
    Int d = mp - mq;
    if (d > 0) z.mul(d, 1);
  }

  // Two-variable stratum: compact edges of the Minkowski staircase, found by
  // scanning all candidate strictly positive primitive normals.
  std::vector<IntVec> candidates;
  auto scan_pairs = [&](const std::vector<IntVec>& supp) {
    for (size_t i = 0; i < supp.size(); ++i)
      for (size_t j = i + 1; j < supp.size(); ++j) {
        Int dx = supp[j][0] - supp[i][0];
        Int dy = supp[j][1] - supp[i][1];
        IntVec nrm{-dy, dx};
        if (nrm[0] < 0) nrm = vec_scale(-1, nrm);
        if (nrm[0] <= 0 || nrm[1] <= 0) continue;
        nrm = primitive(nrm);
        if (std::find(candidates.begin(), candidates.end(), nrm) == candidates.end())
          candidates.push_back(nrm);
      }
  };
  scan_pairs(supp_P);
  scan_pairs(supp_Q);
  for (const auto& a : candidates) {
    auto edge_data = [&](const std::vector<IntVec>& supp) {
      Int best = dot(a, supp[0]);
      for (const auto& e : supp) best = std::min(best, dot(a, e));
      // Lattice length of the argmin segment: gcd of the extreme difference.
      IntVec dir{-a[1], a[0]};
      bool first = true;
      IntVec emin, emax;
      Int tmin = 0, tmax = 0;
      for (const auto& e : supp) {
        if (dot(a, e) != best) continue;
        Int t = dot(dir, e);
        if (first || t < tmin) { tmin = t; emin = e; }
        if (first || t > tmax) { tmax = t; emax = e; }
        first = false;
      }
      Int len = (tmin == tmax) ? Int(0) : content(vec_sub(emax, emin));
      return std::make_pair(best, len);
    };
    auto [dp, lenp] = edge_data(supp_P);
    auto [dq, lenq] = edge_data(supp_Q);
    Int v = lenp + lenq;
    if (v == 0) continue;  // not an edge of the sum
    Int d = dp - dq;
    if (d > 0) z.mul(d, -v);
  }
  return z;
}

}  // namespace newtmon::oracle
