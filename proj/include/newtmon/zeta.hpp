#pragma once

#include "newtmon/cyclotomic.hpp"
#include "newtmon/newton.hpp"

namespace newtmon {

// Local monodromy zeta function from the Newton factorization:
//   zeta = prod_S prod_{i : d_i^S > 0} (1 - t^{d_i^S})^{(-1)^{|S|-1} v_i^S}.
inline CyclotomicProduct zeta_local(const MeroPair& pair) {
  if (pair.mode != Mode::local) throw std::invalid_argument("zeta_local: pair not in local mode");
  CyclotomicProduct z;
  for (const auto& datum : facet_data_all(pair)) {
    if (datum.d <= 0) continue;
    Int sign = (datum.S.size() % 2 == 1) ? 1 : -1;
    z.mul(datum.d, sign * datum.v);
  }
  return z;
}

inline Int chi_bkk(const std::vector<Polyhedron>& deltas, int s);

// Stratified Euler characteristic of Q^{-1}(0) \ P^{-1}(0), each torus
// stratum evaluated by the non-degenerate complete-intersection count.
inline Int chi_complement(const MeroPair& pair) {
  if (pair.mode != Mode::infinity)
    throw std::invalid_argument("chi_complement: pair not in infinity mode");
  if (pair.Q.is_constant()) return 0;  // empty pole locus
  Int total = 0;
  // All strata including the empty one, which is the origin with chi = 1.
  for (unsigned mask = 0; mask < (1u << pair.n); ++mask) {
    std::vector<int> S;
    for (int i = 0; i < pair.n; ++i)
      if (mask & (1u << i)) S.push_back(i);
    int card = static_cast<int>(S.size());
    auto PS = pair.P.restrict(S);
    auto QS = pair.Q.restrict(S);
    bool pz = !PS.has_value();  // P vanishes identically on the stratum
    bool qz = !QS.has_value();
    Int chi_T = (card == 0) ? 1 : 0;
    Int chi_ZQ, chi_both;
    if (qz) {
      chi_ZQ = chi_T;
      chi_both = pz ? chi_T : chi_bkk({convex_hull(PS->support())}, card);
    } else {
      Polyhedron npq = convex_hull(QS->support());
      chi_ZQ = chi_bkk({npq}, card);
      if (pz) {
        chi_both = chi_ZQ;
      } else {
        Polyhedron npp = convex_hull(PS->support());
        chi_both = chi_bkk({npp, npq}, card);
      }
    }
    total += chi_ZQ - chi_both;
  }
  return total;
}

// Monodromy zeta function at infinity.
inline CyclotomicProduct zeta_infinity(const MeroPair& pair) {
  if (pair.mode != Mode::infinity)
    throw std::invalid_argument("zeta_infinity: pair not in infinity mode");
  if (!is_convenient(pair.P, Mode::infinity))
    throw hypothesis_error("zeta_infinity: P is not convenient");
  if (!is_convenient(pair.Q, Mode::infinity) && !pair.Q.is_monomial())
    throw hypothesis_error("zeta_infinity: Q is neither convenient nor a monomial");
  CyclotomicProduct z;
  z.mul(1, chi_complement(pair));
  for (const auto& datum : facet_data_all(pair)) {
    if (datum.d <= 0) continue;
    Int sign = (datum.S.size() % 2 == 1) ? 1 : -1;
    z.mul(datum.d, sign * datum.v);
  }
  return z;
}

// Multiplicity of the eigenvalue lambda != 1 in the middle monodromy, from the
// Newton factorization: mult of (t - lambda) in
//   prod_S prod_{i : d > 0} (t^{d_i^S} - 1)^{(-1)^{n-|S|} v_i^S}.
inline Int multiplicity(const MeroPair& pair, const RootOfUnity& lambda) {
  if (lambda.is_one())
    throw std::invalid_argument("multiplicity at lambda = 1 is unsupported");
  Int m;
  if (pair.mode == Mode::local) {
    if (!is_convenient(pair.P) || !is_convenient(pair.Q))
      throw hypothesis_error("multiplicity: P and Q must be convenient");
    Int acc = 0;
    for (const auto& datum : facet_data_all(pair)) {
      if (datum.d <= 0) continue;
      if (datum.d % lambda.order() != 0) continue;
      Int sign = ((pair.n - static_cast<int>(datum.S.size())) % 2 == 0) ? 1 : -1;
      acc += sign * datum.v;
    }
    m = acc;
    // Same number through the zeta product; the sign bookkeeping must agree.
    Int via_zeta = zeta_local(pair).order_at(lambda);
    if (pair.n % 2 == 0) via_zeta = -via_zeta;
    if (via_zeta != m) throw std::logic_error("multiplicity: inconsistent sign bookkeeping");
  } else {
    Int via_zeta = zeta_infinity(pair).order_at(lambda);
    if (pair.n % 2 == 0) via_zeta = -via_zeta;
    m = via_zeta;
  }
  if (m < 0)
    throw hypothesis_error("multiplicity: negative value certifies a violated hypothesis");
  return m;
}

// Lefschetz number Lambda(m) evaluated on the Newton factor set:
// sum over d | m of d * e_d.
inline Int lefschetz(const MeroPair& pair, const Int& m) {
  if (m < 1) throw std::invalid_argument("lefschetz: m must be positive");
  CyclotomicProduct z = zeta_local(pair);
  Int acc = 0;
  for (const auto& [d, e] : z.factors)
    if (m % d == 0) acc += d * e;
  return acc;
}

// Bernstein-Khovanskii-Kushnirenko Euler characteristic of a non-degenerate
// complete intersection of p hypersurfaces in the s-torus:
//   chi = (-1)^{s-p} sum_{m_1+...+m_p = s, m_i >= 1} Vol(Delta_1^{m_1}, ...).
inline Int chi_bkk(const std::vector<Polyhedron>& deltas, int s) {
  int p = static_cast<int>(deltas.size());
  for (const auto& d : deltas)
    if (d.is_empty()) throw std::invalid_argument("chi_bkk: empty Newton polytope");
  if (p > s) return 0;  // generically empty intersection
  if (p == 0) return (s == 0) ? 1 : 0;
  AffineLatticeFrame fr = standard_frame(s);
  // Compositions m_1 + ... + m_p = s with m_i >= 1.
  std::vector<int> comp(p, 1);
  int rest = s - p;
  Int acc = 0;
  std::function<void(int, int)> rec = [&](int idx, int remaining) {
    if (idx == p - 1) {
      comp[idx] = 1 + remaining;
      std::vector<Polyhedron> args;
      for (int i = 0; i < p; ++i)
        for (int k = 0; k < comp[i]; ++k) args.push_back(deltas[i]);
      acc += mixed_volume(args, fr);
      return;
    }
    for (int take = 0; take <= remaining; ++take) {
      comp[idx] = 1 + take;
      rec(idx + 1, remaining - take);
    }
  };
  rec(0, rest);
  return ((s - p) % 2 == 0) ? acc : -acc;
}

}  // namespace newtmon
