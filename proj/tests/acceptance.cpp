// Acceptance suite: one test case per criterion, each reported with a
// [PASS]/[FAIL] line by the listener below.

#include "newtmon/oracles.hpp"
#include "newtmon/parse.hpp"
#include "newtmon/spectrum.hpp"
#include "newtmon/spectrum_oracle.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <chrono>
#include <iostream>
#include <random>

using namespace newtmon;

namespace {

class CriterionReporter : public Catch::EventListenerBase {
 public:
  using Catch::EventListenerBase::EventListenerBase;
  void testCaseEnded(const Catch::TestCaseStats& stats) override {
    std::cout << (stats.totals.assertions.allPassed() ? "[PASS] " : "[FAIL] ")
              << stats.testInfo->name << std::endl;
  }
};
CATCH_REGISTER_LISTENER(CriterionReporter)

IntVec iv(std::initializer_list<long> xs) {
  IntVec v;
  for (long x : xs) v.push_back(Int(x));
  return v;
}

CyclotomicProduct cyc(std::initializer_list<std::pair<long, long>> factors) {
  CyclotomicProduct z;
  for (auto [d, e] : factors) z.mul(Int(d), Int(e));
  return z;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::vector<IntVec> random_points(std::mt19937& rng, int n, int count, int coord_max) {
  std::uniform_int_distribution<int> dist(0, coord_max);
  std::vector<IntVec> pts;
  for (int i = 0; i < count; ++i) {
    IntVec v(n);
    for (int j = 0; j < n; ++j) v[j] = dist(rng);
    pts.push_back(v);
  }
  return pts;
}

SparsePolynomial random_poly(std::mt19937& rng, int n, int max_exp, int terms) {
  std::uniform_int_distribution<int> e(0, max_exp);
  std::map<IntVec, Rat> t;
  for (int i = 0; i < terms; ++i) {
    IntVec v(n);
    for (int j = 0; j < n; ++j) v[j] = e(rng);
    t[v] = 1;
  }
  return SparsePolynomial(n, t);
}

// A convenient polynomial with prescribed axis exponent range and a few
// extra interior terms.
SparsePolynomial random_convenient(std::mt19937& rng, int n, int axis_lo, int axis_hi,
                                   int extra_terms, int extra_max) {
  std::uniform_int_distribution<int> axis(axis_lo, axis_hi);
  std::uniform_int_distribution<int> e(1, extra_max);
  std::map<IntVec, Rat> t;
  for (int i = 0; i < n; ++i) {
    IntVec v(n, 0);
    v[i] = axis(rng);
    t[v] = 1;
  }
  for (int k = 0; k < extra_terms; ++k) {
    IntVec v(n);
    for (int j = 0; j < n; ++j) v[j] = e(rng);
    t[v] = 1;
  }
  return SparsePolynomial(n, t);
}

}  // namespace

TEST_CASE("criterion 1: cusp reduction with trivial denominator") {
  auto t0 = std::chrono::steady_clock::now();
  auto pair = make_pair(parse_polynomial("x^2+y^3", 2), SparsePolynomial::constant(2), Mode::local);
  auto z = zeta_local(pair);
  REQUIRE(z == cyc({{2, 1}, {3, 1}, {6, -1}}));
  REQUIRE(z == oracle::zeta_staircase_2d(pair.P, pair.Q));
  // Against the known cusp monodromy characteristic polynomial t^2 - t + 1:
  // (1-t^2)(1-t^3)/(1-t^6) must equal (1-t)/(1 - t + t^2) as rational
  // functions, i.e. cross-multiplied polynomials coincide.
  UniPoly one_t = one_minus_t_pow(1);
  UniPoly lhs;  // (1-t^2)(1-t^3)
  {
    UniPoly a, b;
    a.add(0, 1); a.add(2, -1);
    b.add(0, 1); b.add(3, -1);
    lhs = a * b;
  }
  UniPoly char_poly;  // 1 - t + t^2 = reversed characteristic polynomial
  char_poly.add(0, 1); char_poly.add(1, -1); char_poly.add(2, 1);
  UniPoly denom6;
  denom6.add(0, 1); denom6.add(6, -1);
  REQUIRE(lhs * char_poly == one_t * denom6);
  REQUIRE(seconds_since(t0) < 1.0);
}

TEST_CASE("criterion 2: the worked meromorphic pair") {
  auto t0 = std::chrono::steady_clock::now();
  auto pair = make_pair(parse_polynomial("x^2+y^3", 2), parse_polynomial("x+y", 2), Mode::local);
  REQUIRE(zeta_local(pair) == cyc({{2, 1}, {4, -1}}));
  REQUIRE(multiplicity(pair, RootOfUnity(1, 4)) == 1);
  REQUIRE(multiplicity(pair, RootOfUnity(3, 4)) == 1);
  REQUIRE(multiplicity(pair, RootOfUnity(1, 2)) == 0);

  SpectrumEngine eng(pair);
  auto jc = eng.jordan_counts(RootOfUnity(1, 4));  // asserts both paths agree
  REQUIRE(jc.at(1) == 1);
  REQUIRE(jc.total_dimension() == 1);
  for (const auto& lambda : eng.all_lambdas()) {
    auto [jn, jn1] = eng.jordan_extremes(lambda);
    REQUIRE(jn == 0);  // J_2 = 0 for every lambda != 1
  }
  auto sp = eng.reduced_spectrum();
  REQUIRE(sp.terms.size() == 2);
  REQUIRE(sp.reflect(Rat(2)) == sp);
  for (const auto& [e, v] : sp.terms) {
    REQUIRE(e > 0);
    REQUIRE(e < 2);
  }
  REQUIRE(sp == oracle::spectrum_by_definition(pair, 4));
  REQUIRE(seconds_since(t0) < 5.0);
}

TEST_CASE("criterion 3: randomized oracle equivalence corpus") {
  auto t0 = std::chrono::steady_clock::now();
  std::mt19937 rng(20260809);
  int instances = 0;

  // normalized_volume vs dilation counting
  for (int trial = 0; trial < 60; ++trial) {
    int n = 1 + trial % 3;
    auto pts = random_points(rng, n, n + 2, 4);
    auto P = convex_hull(pts);
    if (P.is_empty()) continue;
    REQUIRE(normalized_volume(P) == oracle::volume_by_dilation(P.vertices()));
    ++instances;
  }

  // mixed_volume vs grid interpolation
  for (int trial = 0; trial < 40; ++trial) {
    auto A = convex_hull(random_points(rng, 2, 4, 4));
    auto B = convex_hull(random_points(rng, 2, 4, 4));
    REQUIRE(mixed_volume({A, B}, standard_frame(2)) ==
            oracle::mixed_volume_by_interpolation({A.vertices(), B.vertices()}));
    ++instances;
  }
  for (int trial = 0; trial < 20; ++trial) {
    auto A = convex_hull(random_points(rng, 3, 4, 3));
    auto B = convex_hull(random_points(rng, 3, 4, 3));
    auto C = convex_hull(random_points(rng, 3, 4, 3));
    REQUIRE(mixed_volume({A, B, C}, standard_frame(3)) ==
            oracle::mixed_volume_by_interpolation({A.vertices(), B.vertices(), C.vertices()}));
    ++instances;
  }

  // zeta_local vs the staircase oracle
  std::uniform_int_distribution<int> nt(1, 4);
  for (int trial = 0; trial < 60; ++trial) {
    auto P = random_poly(rng, 2, 5, nt(rng));
    auto Q = random_poly(rng, 2, 5, nt(rng));
    REQUIRE(zeta_local(make_pair(P, Q, Mode::local)) == oracle::zeta_staircase_2d(P, Q));
    ++instances;
  }

  // reduced_spectrum vs the literal display, on convenient properly
  // contained pairs
  int spectra = 0;
  for (int trial = 0; trial < 400 && spectra < 30; ++trial) {
    int n = (spectra % 5 == 4) ? 3 : 1 + spectra % 2;
    int cap = n == 3 ? 3 : 5;
    auto Q = random_convenient(rng, n, 1, 2, trial % 2, 2);
    auto P = random_convenient(rng, n, 3, cap, trial % 3, cap);
    auto pair = make_pair(P, Q, Mode::local);
    if (!is_properly_contained(pair).ok) continue;
    auto engine_sp = SpectrumEngine(pair).reduced_spectrum();
    REQUIRE(engine_sp == oracle::spectrum_by_definition(pair, n + 2));
    ++spectra;
    ++instances;
  }
  REQUIRE(spectra == 30);
  REQUIRE(instances >= 200);
  REQUIRE(seconds_since(t0) < 300.0);
}

TEST_CASE("criterion 4: identity suite") {
  // mixed volume collapses on equal arguments
  for (int trial = 0; trial < 5; ++trial) {
    std::mt19937 rng(100 + trial);
    int n = 1 + trial % 3;
    auto P = convex_hull(random_points(rng, n, n + 2, 4));
    if (P.dim() != n) continue;
    std::vector<Polyhedron> args(n, P);
    REQUIRE(mixed_volume(args, standard_frame(n)) == normalized_volume(P));
  }
  // g of simplex intervals is 1 up to dimension 4
  for (int d = 1; d <= 4; ++d) {
    std::vector<IntVec> pts{zero_vector(d)};
    for (int j = 0; j < d; ++j) pts.push_back(unit_vector(d, j));
    auto ps = poset_of_polytope(convex_hull(pts));
    for (int lo = 0; lo < ps.size(); ++lo)
      for (int hi = 0; hi < ps.size(); ++hi)
        if (ps.leq[lo][hi]) REQUIRE(g_poly(ps, lo, hi) == UniPoly::constant(1));
  }
  // g([empty, square]) = 1 + t
  auto sq = convex_hull({iv({0, 0}), iv({1, 0}), iv({0, 1}), iv({1, 1})});
  auto psq = poset_of_polytope(sq);
  UniPoly onet;
  onet.add(0, 1);
  onet.add(1, 1);
  REQUIRE(g_poly(psq, 0, psq.size() - 1) == onet);
  // local h of the trivial and split segment subdivisions
  auto P02 = convex_hull({iv({0}), iv({2})});
  {
    std::map<IntVec, Int> w{{iv({0}), 0}, {iv({2}), 0}};
    auto [s, nu] = regular_subdivision(P02, {iv({0}), iv({2})}, w);
    REQUIRE(local_h(s, {}) == UniPoly());
    REQUIRE(hstar(convex_hull({iv({0}), iv({1})}), nu, RootOfUnity(0, 1)) ==
            UniPoly::constant(1));
  }
  {
    std::map<IntVec, Int> w{{iv({0}), 0}, {iv({1}), 0}, {iv({2}), 1}};
    auto [s, nu] = regular_subdivision(P02, {iv({0}), iv({1}), iv({2})}, w);
    UniPoly t;
    t.add(1, 1);
    REQUIRE(local_h(s, {}) == t);
  }
  {
    std::map<IntVec, Int> w{{iv({0}), 0}, {iv({2}), 1}};
    auto [s, nu] = regular_subdivision(P02, {iv({0}), iv({2})}, w);  // nu = x/2
    UniPoly u;
    u.add(1, 1);
    REQUIRE(hstar(P02, nu, RootOfUnity(1, 2)) == u);
  }
}

TEST_CASE("criterion 5: invariant suite on spectrum and Jordan runs") {
  std::vector<std::pair<std::string, int>> inputs = {
      {"x^2+y^3|x+y", 2},       {"x^4+y^6|x^3+y^2", 2}, {"x^3+y^4|x+y", 2},
      {"x^5+x*y^2+y^5|x+y", 2}, {"x^2+y^2|x+y", 2},     {"x^3+y^3+z^3|x+y+z", 3},
      {"x^4+y^4+z^2|x+y+z", 3}, {"x^4|x", 1},           {"x^5|x^2+x", 1},
  };
  for (const auto& [text, n] : inputs) {
    auto bar = text.find('|');
    auto pair = make_pair(parse_polynomial(text.substr(0, bar), n),
                          parse_polynomial(text.substr(bar + 1), n), Mode::local);
    SpectrumEngine eng(pair);
    auto sp = eng.reduced_spectrum();  // asserts symmetry + class masses
    REQUIRE(sp.reflect(Rat(n)) == sp);
    REQUIRE(sp == eng.spectrum_from_hodge());  // two-path spectrum equality
    for (const auto& lambda : eng.all_lambdas()) {
      auto E = eng.e_lambda(lambda);  // asserts Hodge symmetry and support
      for (const auto& [k, v] : E.E.c)
        REQUIRE(E.h(k.first, k.second) == E.h(n - 1 - k.second, n - 1 - k.first));
      // conjugation swaps u and v
      auto Ebar = eng.e_lambda(lambda.conjugate());
      for (const auto& [k, v] : E.E.c) REQUIRE(Ebar.h(k.second, k.first) == E.h(k.first, k.second));
      auto jc = eng.jordan_counts(lambda);  // asserts path A = path B
      REQUIRE(jc.total_dimension() == multiplicity(pair, lambda));
      eng.jordan_extremes(lambda);  // asserts census = jordan_counts
      // lambda-mass of the spectrum
      Int mass = 0;
      for (const auto& [e, v] : sp.terms)
        if (RootOfUnity::from_fraction(e) == lambda) mass += v;
      REQUIRE(mass == multiplicity(pair, lambda));
    }
  }
}

TEST_CASE("criterion 6: monodromy at infinity") {
  // Q = 1 reduces to the one-polynomial product at infinity.
  auto ls = make_pair(parse_polynomial("x^2+y^3", 2), SparsePolynomial::constant(2),
                      Mode::infinity);
  REQUIRE(zeta_infinity(ls) == cyc({{2, 1}, {3, 1}, {6, -1}}));
  REQUIRE(chi_complement(ls) == 0);
  auto ls2 = make_pair(parse_polynomial("x^3+x*y+y^2", 2), SparsePolynomial::constant(2),
                       Mode::infinity);
  // product over the facets of Gamma_oo avoiding 0, distances only from P
  CyclotomicProduct expect2;
  for (const auto& d : facet_data_all(ls2)) {
    REQUIRE(d.dQ == 0);
    if (d.d > 0) expect2.mul(d.d, (d.S.size() % 2 == 1 ? 1 : -1) * d.v);
  }
  REQUIRE(zeta_infinity(ls2) == expect2);

  // n = 1 explicit covers: zeta = (1-t)^{deg Q} (1-t^{deg P - deg Q}) for
  // generic convenient P, Q with deg P > deg Q.
  auto cover = [](int p, int q) {
    CyclotomicProduct z;
    z.mul(1, q);
    z.mul(p - q, 1);
    return z;
  };
  REQUIRE(zeta_infinity(make_pair(parse_polynomial("x^2", 1), parse_polynomial("x+1", 1),
                                  Mode::infinity)) == cover(2, 1));
  REQUIRE(zeta_infinity(make_pair(parse_polynomial("x^5+x", 1),
                                  parse_polynomial("x^2+x+3", 1), Mode::infinity)) ==
          cover(5, 2));
  REQUIRE(zeta_infinity(make_pair(parse_polynomial("x^4+x^2", 1), parse_polynomial("x", 1),
                                  Mode::infinity)) == cover(4, 1));
}

TEST_CASE("criterion 7: polynomiality guard") {
  // accepts vertex-integral weights across a small random corpus
  std::mt19937 rng(99);
  std::uniform_int_distribution<int> wdist(0, 3);
  for (int trial = 0; trial < 10; ++trial) {
    int n = 1 + trial % 2;
    auto P = convex_hull(random_points(rng, n, n + 2, 3));
    if (P.dim() != n) continue;
    auto pts = lattice_points(P, 1);
    std::map<IntVec, Int> w;
    for (const auto& v : pts) w[v] = wdist(rng);
    auto [s, nu] = regular_subdivision(P, pts, w);
    REQUIRE(nu.vertex_integral());
    auto all = hstar_all(P, nu);  // runs the verification step
    REQUIRE(all.count(RootOfUnity(0, 1)) == 1);
  }
  // rejects the constructed counterexample nu(1) = 1/2 on [0,1]
  auto P01 = convex_hull({iv({0}), iv({1})});
  std::map<IntVec, Int> w{{iv({0}), 0}, {iv({1}), 0}};
  auto [s, nu] = regular_subdivision(P01, {iv({0}), iv({1})}, w);
  PiecewiseAffine bad = nu;
  bad.pieces[0].grad = {Rat(1) / Rat(2)};
  bad.pieces[0].constant = 0;
  REQUIRE_FALSE(bad.vertex_integral());
  REQUIRE_THROWS_WITH(hstar(P01, bad, RootOfUnity(0, 1)),
                      Catch::Matchers::ContainsSubstring("not vertex-integral"));
}
