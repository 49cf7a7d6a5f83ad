#include "newtmon/oracles.hpp"
#include "newtmon/parse.hpp"
#include "newtmon/poly_ring.hpp"
#include "newtmon/zeta.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace newtmon;

namespace {

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

}  // namespace

TEST_CASE("zeta of the cusp x^2 + y^3") {
  auto pair = make_pair(parse_polynomial("x^2+y^3", 2), SparsePolynomial::constant(2), Mode::local);
  CHECK(zeta_local(pair) == cyc({{2, 1}, {3, 1}, {6, -1}}));
}

TEST_CASE("zeta of the worked meromorphic pair") {
  auto pair = make_pair(parse_polynomial("x^2+y^3", 2), parse_polynomial("x+y", 2), Mode::local);
  CHECK(zeta_local(pair) == cyc({{2, 1}, {4, -1}}));
  auto sq = make_pair(parse_polynomial("x^2+y^2", 2), parse_polynomial("x+y", 2), Mode::local);
  CHECK(zeta_local(sq) == cyc({{1, -1}}));
}

TEST_CASE("eigenvalue multiplicities of the worked pair") {
  auto pair = make_pair(parse_polynomial("x^2+y^3", 2), parse_polynomial("x+y", 2), Mode::local);
  CHECK(multiplicity(pair, RootOfUnity(1, 4)) == 1);
  CHECK(multiplicity(pair, RootOfUnity(3, 4)) == 1);
  CHECK(multiplicity(pair, RootOfUnity(1, 2)) == 0);
  CHECK(multiplicity(pair, RootOfUnity(1, 3)) == 0);
  CHECK_THROWS_AS(multiplicity(pair, RootOfUnity(0, 1)), std::invalid_argument);
  // multiplicities come in conjugate pairs
  for (long d : {3L, 4L, 5L, 6L}) {
    RootOfUnity l(1, d);
    CHECK(multiplicity(pair, l) == multiplicity(pair, l.conjugate()));
  }
}

TEST_CASE("multiplicity requires convenient numerator and denominator") {
  auto pair = make_pair(parse_polynomial("x^2*y+y^3", 2), parse_polynomial("x+y", 2), Mode::local);
  CHECK_THROWS_AS(multiplicity(pair, RootOfUnity(1, 2)), hypothesis_error);
}

TEST_CASE("lefschetz numbers") {
  auto cusp = make_pair(parse_polynomial("x^2+y^3", 2), SparsePolynomial::constant(2), Mode::local);
  CHECK(lefschetz(cusp, 1) == 0);
  CHECK(lefschetz(cusp, 6) == -1);
  CHECK(lefschetz(cusp, 5) == 0);
  auto pair = make_pair(parse_polynomial("x^2+y^3", 2), parse_polynomial("x+y", 2), Mode::local);
  CHECK(lefschetz(pair, 2) == 2);
  // Lambda(m) only sees the divisors of m present in the factor set
  CHECK(lefschetz(pair, 2) == lefschetz(pair, 6));
  CHECK(lefschetz(pair, 1) == lefschetz(pair, 3));
}

TEST_CASE("BKK Euler characteristics") {
  auto seg1 = convex_hull({iv({0}), iv({5})});
  CHECK(chi_bkk({seg1}, 1) == 5);
  auto tri = convex_hull({iv({0, 0}), iv({3, 0}), iv({0, 2})});
  CHECK(chi_bkk({tri}, 2) == -6);
  auto e1 = convex_hull({iv({0, 0}), iv({1, 0})});
  auto e2 = convex_hull({iv({0, 0}), iv({0, 1})});
  CHECK(chi_bkk({e1, e2}, 2) == 1);
  // p > s: generically empty
  CHECK(chi_bkk({e1, e1, e2}, 2) == 0);
}

TEST_CASE("chi of the pole complement") {
  auto n1 = make_pair(parse_polynomial("x^2+x+2", 1), parse_polynomial("x+1", 1), Mode::infinity);
  CHECK(chi_complement(n1) == 1);
  auto q1 = make_pair(parse_polynomial("x^2+y^3", 2), SparsePolynomial::constant(2), Mode::infinity);
  CHECK(chi_complement(q1) == 0);
  // Q = x + y + 1 defines a line (chi = 1); P generic of bidegree (1,1)
  // meets it in one torus point and one axis point.
  auto ln = make_pair(parse_polynomial("x*y + x + y + 2", 2), parse_polynomial("x+y+1", 2),
                      Mode::infinity);
  CHECK(chi_complement(ln) == -1);
}

TEST_CASE("zeta at infinity") {
  // n = 1 cover: P = x^2, Q = x + 1 gives (1-t)^2.
  auto n1 = make_pair(parse_polynomial("x^2", 1), parse_polynomial("x+1", 1), Mode::infinity);
  CHECK(zeta_infinity(n1) == cyc({{1, 2}}));
  // Q = 1 reduces to the one-polynomial product at infinity.
  auto ls = make_pair(parse_polynomial("x^2+y^3", 2), SparsePolynomial::constant(2), Mode::infinity);
  CHECK(zeta_infinity(ls) == cyc({{2, 1}, {3, 1}, {6, -1}}));
  // P = Q formally: no facet factors survive, only the chi factor.
  auto same = make_pair(parse_polynomial("x^2+y^2", 2), parse_polynomial("x^2+y^2", 2),
                        Mode::infinity);
  auto z = zeta_infinity(same);
  for (const auto& [d, e] : z.factors) CHECK(d == 1);
}

TEST_CASE("multiplicity at infinity via the zeta order") {
  auto n1 = make_pair(parse_polynomial("x^3", 1), parse_polynomial("x+1", 1), Mode::infinity);
  // zeta = (1-t)^chi (1-t^2): eigenvalue -1 appears once
  CHECK(multiplicity(n1, RootOfUnity(1, 2)) == 1);
}

TEST_CASE("local zeta agrees with the staircase oracle on random pairs") {
  std::mt19937 rng(2024);
  std::uniform_int_distribution<int> nt(1, 4);
  int done = 0;
  for (int trial = 0; trial < 80 && done < 60; ++trial) {
    auto P = random_poly(rng, 2, 5, nt(rng));
    auto Q = random_poly(rng, 2, 5, nt(rng));
    auto pair = make_pair(P, Q, Mode::local);
    CHECK(zeta_local(pair) == oracle::zeta_staircase_2d(P, Q));
    ++done;
  }
  CHECK(done >= 60);
}

TEST_CASE("zeta degree matches the expanded rational function on small cases") {
  auto pair = make_pair(parse_polynomial("x^2+y^3", 2), parse_polynomial("x+y", 2), Mode::local);
  auto z = zeta_local(pair);
  UniPoly num = UniPoly::constant(1), den = UniPoly::constant(1);
  for (const auto& [d, e] : z.factors) {
    UniPoly f;
    f.add(0, 1);
    f.add(to_int(d), -1);
    for (Int i = 0; i < (e > 0 ? e : -e); ++i)
      (e > 0 ? num : den) = (e > 0 ? num : den) * f;
  }
  CHECK(num.degree() - den.degree() == to_int(z.degree()));
}

TEST_CASE("ord at lambda matches multiplicity sign bookkeeping") {
  auto pair = make_pair(parse_polynomial("x^3+y^4", 2), parse_polynomial("x+y", 2), Mode::local);
  auto z = zeta_local(pair);
  for (long d : {2L, 3L, 4L, 5L, 6L}) {
    RootOfUnity l(1, d);
    Int ord = z.order_at(l);
    Int sign = (pair.n % 2 == 1) ? 1 : -1;
    CHECK(multiplicity(pair, l) == sign * ord);
  }
}
