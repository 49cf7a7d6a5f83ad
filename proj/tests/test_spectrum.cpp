#include "newtmon/parse.hpp"
#include "newtmon/spectrum.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace newtmon;

namespace {

IntVec iv(std::initializer_list<long> xs) {
  IntVec v;
  for (long x : xs) v.push_back(Int(x));
  return v;
}

MeroPair worked_pair() {
  return make_pair(parse_polynomial("x^2+y^3", 2), parse_polynomial("x+y", 2), Mode::local);
}

}  // namespace

TEST_CASE("weighted region of the worked pair") {
  SpectrumEngine eng(worked_pair());
  const auto& K = eng.region().K;
  CHECK(K.vertices() ==
        std::vector<IntVec>{iv({0, 1}), iv({0, 3}), iv({1, 0}), iv({2, 0})});
  const auto& sub = eng.region().subdivision();
  REQUIRE(sub.maximal_cells.size() == 2);
  CHECK(sub.find_cell({iv({0, 1}), iv({1, 0}), iv({2, 0})}) >= 0);
  CHECK(sub.find_cell({iv({0, 1}), iv({0, 3}), iv({2, 0})}) >= 0);
  // nu is 0 on the P-boundary and 1 on the Q-boundary
  CHECK(eng.region().nu.eval_lattice(iv({2, 0})) == 0);
  CHECK(eng.region().nu.eval_lattice(iv({0, 3})) == 0);
  CHECK(eng.region().nu.eval_lattice(iv({1, 0})) == 1);
  CHECK(eng.region().nu.eval_lattice(iv({0, 1})) == 1);
}

TEST_CASE("weighted region rejects bad pairs") {
  auto P = parse_polynomial("x^2+y^3", 2);
  CHECK_THROWS_AS(build_weighted_region(make_pair(P, P, Mode::local)), hypothesis_error);
  CHECK_THROWS_AS(
      build_weighted_region(make_pair(parse_polynomial("x^2*y+y^3", 2),
                                      parse_polynomial("x+y", 2), Mode::local)),
      hypothesis_error);
}

TEST_CASE("cayley cells of the worked pair") {
  SpectrumEngine eng(worked_pair());
  const auto& cells = eng.cells();
  REQUIRE(cells.size() == 5);

  // interior vertex (2,1): box = segment (2,0)-(0,1), d = 1, s = 2, m = 1
  bool found_interior = false, found_facet = false, found_axis = false;
  for (const auto& c : cells) {
    if (c.gamma.dim() == 0 && c.gamma.vertices()[0] == iv({2, 1})) {
      found_interior = true;
      CHECK(c.box.vertices() == std::vector<IntVec>{iv({0, 1}), iv({2, 0})});
      CHECK(c.d == 1);
      CHECK(c.s == 2);
      CHECK(c.m == 1);
    }
    if (c.gamma.dim() == 1 &&
        c.gamma.vertices() == std::vector<IntVec>{iv({0, 4}), iv({2, 1})}) {
      found_facet = true;
      CHECK(c.box.vertices() == std::vector<IntVec>{iv({0, 1}), iv({0, 3}), iv({2, 0})});
      CHECK(c.d == 4);
      CHECK(c.s == 2);
      CHECK(c.m == 0);
    }
    if (c.gamma.dim() == 0 && c.gamma.vertices()[0] == iv({3, 0})) {
      found_axis = true;
      CHECK(c.s == 1);
      CHECK(c.m == 0);
    }
  }
  CHECK(found_interior);
  CHECK(found_facet);
  CHECK(found_axis);
}

TEST_CASE("heights measure the distance from the Q side") {
  SpectrumEngine eng(worked_pair());
  for (const auto& c : eng.cells()) {
    for (const auto& v : c.faceQ.vertices()) CHECK(c.height(v) == 0);
    for (const auto& v : c.faceP.vertices()) CHECK(c.height(v) == c.d);
  }
}

TEST_CASE("equivariant Hodge-Deligne polynomial of the worked pair") {
  SpectrumEngine eng(worked_pair());
  auto E = eng.e_lambda(RootOfUnity(1, 4));
  CHECK(E.h(0, 1) == 1);
  CHECK(E.total_mass() == 1);
  CHECK(E.total_mass() == multiplicity(worked_pair(), RootOfUnity(1, 4)));
  // order five class carries nothing
  CHECK(eng.e_lambda(RootOfUnity(1, 5)).E.is_zero());
  // conjugation swaps (p,q)
  auto Ebar = eng.e_lambda(RootOfUnity(3, 4));
  CHECK(Ebar.h(1, 0) == 1);
  CHECK_THROWS_AS(eng.e_lambda(RootOfUnity(0, 1)), std::invalid_argument);
}

TEST_CASE("jordan counts of the worked pair") {
  SpectrumEngine eng(worked_pair());
  auto jc = eng.jordan_counts(RootOfUnity(1, 4));
  CHECK(jc.at(1) == 1);
  CHECK(jc.at(2) == 0);
  CHECK(jc.total_dimension() == 1);
  CHECK(eng.jordan_counts(RootOfUnity(1, 5)).blocks.empty());
  CHECK(eng.jordan_counts(RootOfUnity(1, 2)).blocks.empty());
}

TEST_CASE("tilde_l decompositions") {
  UniPoly t;
  t.add(1, 1);
  UniPoly lt = tilde_l(t, 2);
  CHECK(lt == [] { UniPoly p; p.add(1, 1); return p; }());

  UniPoly bad;  // 1 + t^2 is palindromic of span 2 but not unimodal
  bad.add(0, 1);
  bad.add(2, 1);
  CHECK_THROWS_AS(tilde_l(bad, 2), hypothesis_error);

  CHECK(tilde_l(UniPoly(), 2) == UniPoly());

  UniPoly notpal;
  notpal.add(0, 1);
  notpal.add(1, 2);
  CHECK_THROWS_AS(tilde_l(notpal, 2), std::invalid_argument);
}

TEST_CASE("jordan extremes of the worked pair") {
  SpectrumEngine eng(worked_pair());
  for (long k : {1L, 3L}) {
    auto [jn, jn1] = eng.jordan_extremes(RootOfUnity(k, 4));
    CHECK(jn == 0);  // the unique interior vertex has d = 1 and 4 does not divide 1
    CHECK(jn1 == 1);
  }
  auto [jn, jn1] = eng.jordan_extremes(RootOfUnity(1, 2));
  CHECK(jn == 0);
  CHECK(jn1 == 0);
}

TEST_CASE("an interior vertex with even lattice distance gives a maximal block") {
  auto pair = make_pair(parse_polynomial("x^4+y^6", 2), parse_polynomial("x^3+y^2", 2),
                        Mode::local);
  SpectrumEngine eng(pair);
  // direct census: the only interior vertex of Gamma_+(f) is (4,2) with d = 2
  int interior_vertices = 0;
  for (const auto& c : eng.cells()) {
    if (c.gamma.dim() != 0) continue;
    const IntVec& q = c.gamma.vertices()[0];
    if (q[0] > 0 && q[1] > 0) {
      ++interior_vertices;
      CHECK(q == iv({4, 2}));
      CHECK(c.d == 2);
    }
  }
  CHECK(interior_vertices == 1);
  auto [jn, jn1] = eng.jordan_extremes(RootOfUnity(1, 2));
  CHECK(jn == 1);
  CHECK(eng.jordan_counts(RootOfUnity(1, 2)).at(2) == 1);
}

TEST_CASE("reduced spectrum of the worked pair") {
  SpectrumEngine eng(worked_pair());
  auto sp = eng.reduced_spectrum();
  PuiseuxPolynomial expected;
  expected.add(Rat(1) / Rat(4), 1);
  expected.add(Rat(7) / Rat(4), 1);
  CHECK(sp == expected);
  CHECK(sp.total_mass() == 2);
  CHECK(sp == eng.spectrum_from_hodge());
}

TEST_CASE("pairs with only unipotent monodromy have empty spectrum") {
  auto pair = make_pair(parse_polynomial("x^2+y^2", 2), parse_polynomial("x+y", 2), Mode::local);
  SpectrumEngine eng(pair);
  CHECK(eng.reduced_spectrum().is_zero());
  CHECK(eng.lambda_order_bound() == 1);
}

TEST_CASE("spectrum and jordan invariants on assorted pairs") {
  std::vector<std::pair<std::string, std::string>> pairs = {
      {"x^2+y^3", "x+y"},
      {"x^4+y^6", "x^3+y^2"},
      {"x^3+y^4", "x+y"},
      {"x^5+x*y^2+y^5", "x+y"},
  };
  for (const auto& [ps, qs] : pairs) {
    auto pair = make_pair(parse_polynomial(ps, 2), parse_polynomial(qs, 2), Mode::local);
    SpectrumEngine eng(pair);
    auto sp = eng.reduced_spectrum();
    CHECK(sp.reflect(Rat(2)) == sp);
    CHECK(sp == eng.spectrum_from_hodge());
    for (const auto& lambda : eng.all_lambdas()) {
      auto jc = eng.jordan_counts(lambda);  // internally checks both paths
      CHECK(jc.total_dimension() == multiplicity(pair, lambda));
      eng.jordan_extremes(lambda);          // internally cross-checked
      auto E = eng.e_lambda(lambda);
      for (const auto& [k, v] : E.E.c)
        CHECK(E.h(k.first, k.second) == E.h(1 - k.second, 1 - k.first));
    }
  }
}

TEST_CASE("three-variable pair end to end") {
  auto pair = make_pair(parse_polynomial("x^3+y^3+z^3", 3), parse_polynomial("x+y+z", 3),
                        Mode::local);
  SpectrumEngine eng(pair);
  auto sp = eng.reduced_spectrum();
  CHECK_FALSE(sp.is_zero());
  CHECK(sp.reflect(Rat(3)) == sp);
  CHECK(sp == eng.spectrum_from_hodge());
  for (const auto& lambda : eng.all_lambdas()) {
    auto jc = eng.jordan_counts(lambda);
    CHECK(jc.total_dimension() == multiplicity(pair, lambda));
  }
}
