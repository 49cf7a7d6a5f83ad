#include "newtmon/oracles.hpp"
#include "newtmon/volume.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace newtmon;

namespace {

IntVec iv(std::initializer_list<long> xs) {
  IntVec v;
  for (long x : xs) v.push_back(Int(x));
  return v;
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

}  // namespace

TEST_CASE("convex hull of the unit square") {
  auto sq = convex_hull({iv({0, 0}), iv({1, 0}), iv({0, 1}), iv({1, 1})});
  CHECK(sq.dim() == 2);
  CHECK(sq.vertices().size() == 4);
  CHECK(sq.facets().size() == 4);
}

TEST_CASE("convex hull of the cusp staircase") {
  auto g = convex_hull({iv({2, 0}), iv({0, 3})}, {iv({1, 0}), iv({0, 1})});
  CHECK(g.vertices() == std::vector<IntVec>{iv({0, 3}), iv({2, 0})});
  REQUIRE(g.facets().size() == 3);
  CHECK(g.facets()[0].normal == iv({0, 1}));
  CHECK(g.facets()[0].offset == 0);
  CHECK(g.facets()[1].normal == iv({1, 0}));
  CHECK(g.facets()[2].normal == iv({3, 2}));
  CHECK(g.facets()[2].offset == 6);
}

TEST_CASE("convex hull of nothing is the empty polytope") {
  auto e = convex_hull({});
  CHECK(e.dim() == -1);
  CHECK(e.is_empty());
  CHECK_THROWS_AS(convex_hull({}, {iv({1})}), std::invalid_argument);
}

TEST_CASE("hull rejects mismatched dimensions") {
  CHECK_THROWS_AS(convex_hull({iv({1, 2}), iv({1})}), std::invalid_argument);
}

TEST_CASE("interior and redundant points are dropped") {
  auto sq = convex_hull({iv({0, 0}), iv({4, 0}), iv({0, 4}), iv({4, 4}), iv({2, 2}), iv({1, 0})});
  CHECK(sq.vertices().size() == 4);
}

TEST_CASE("supporting faces") {
  auto sq = convex_hull({iv({0, 0}), iv({1, 0}), iv({0, 1}), iv({1, 1})});
  auto left = sq.supporting_face(iv({1, 0}));
  CHECK(left.vertices() == std::vector<IntVec>{iv({0, 0}), iv({0, 1})});

  auto g = convex_hull({iv({2, 0}), iv({0, 3})}, {iv({1, 0}), iv({0, 1})});
  auto f = g.supporting_face(iv({3, 2}));
  CHECK(f.vertices() == std::vector<IntVec>{iv({0, 3}), iv({2, 0})});

  CHECK(sq.supporting_face(zero_vector(2)) == sq);
  CHECK(g.supporting_face(zero_vector(2)) == g);
  CHECK_THROWS_AS(g.supporting_face(iv({-1, 0})), std::invalid_argument);
}

TEST_CASE("minkowski sums") {
  auto point = convex_hull({iv({3, 5})});
  auto sq = convex_hull({iv({0, 0}), iv({1, 0}), iv({0, 1}), iv({1, 1})});
  auto moved = minkowski_sum(point, sq);
  CHECK(moved.vertices() == std::vector<IntVec>{iv({3, 5}), iv({3, 6}), iv({4, 5}), iv({4, 6})});

  auto a = convex_hull({iv({2, 0}), iv({0, 3})}, {iv({1, 0}), iv({0, 1})});
  auto b = convex_hull({iv({1, 0}), iv({0, 1})}, {iv({1, 0}), iv({0, 1})});
  auto s = minkowski_sum(a, b);
  CHECK(s.vertices() == std::vector<IntVec>{iv({0, 4}), iv({2, 1}), iv({3, 0})});
  std::vector<IntVec> compact_normals;
  for (const auto& f : s.facets())
    if (f.normal[0] > 0 && f.normal[1] > 0) compact_normals.push_back(f.normal);
  CHECK(compact_normals == std::vector<IntVec>{iv({1, 1}), iv({3, 2})});

  auto e1 = convex_hull({iv({0, 0}), iv({1, 0})});
  auto e2 = convex_hull({iv({0, 0}), iv({0, 1})});
  CHECK(minkowski_sum(e1, e2) ==
        convex_hull({iv({0, 0}), iv({1, 0}), iv({0, 1}), iv({1, 1})}));
}

TEST_CASE("lattice frames") {
  auto f = lattice_frame({iv({2, 0}), iv({0, 3})});
  CHECK(f.dim == 1);
  REQUIRE(f.basis.size() == 1);
  CHECK(content(f.basis[0]) == 1);  // primitive direction of (-2,3)

  auto pt = lattice_frame({iv({7, 8})});
  CHECK(pt.dim == 0);
  CHECK(pt.basis.empty());

  auto tri = lattice_frame({iv({0, 0}), iv({2, 0}), iv({0, 2})});
  CHECK(tri.dim == 2);
  // full sublattice: unit vectors generate
  CHECK(rows_are_saturated_basis(tri.basis));
}

TEST_CASE("normalized volumes") {
  for (int d = 1; d <= 4; ++d) {
    std::vector<IntVec> cube;
    for (unsigned mask = 0; mask < (1u << d); ++mask) {
      IntVec v(d);
      for (int j = 0; j < d; ++j) v[j] = (mask >> j) & 1;
      cube.push_back(v);
    }
    CHECK(normalized_volume(convex_hull(cube)) == factorial(d));
    std::vector<IntVec> simplex{zero_vector(d)};
    for (int j = 0; j < d; ++j) simplex.push_back(unit_vector(d, j));
    CHECK(normalized_volume(convex_hull(simplex)) == 1);
  }
  auto seg = convex_hull({iv({2, 0}), iv({0, 3})});
  CHECK(normalized_volume(seg) == 1);  // lattice length in its own frame
  CHECK(normalized_volume(Polyhedron::empty(2), standard_frame(2)) == 0);
  // lower-dimensional polytope in a bigger frame
  CHECK(normalized_volume(seg, standard_frame(2)) == 0);
}

TEST_CASE("mixed volume identities") {
  auto e1 = convex_hull({iv({0, 0}), iv({1, 0})});
  auto e2 = convex_hull({iv({0, 0}), iv({0, 1})});
  auto fr = standard_frame(2);
  CHECK(mixed_volume({e1, e2}, fr) == 1);
  auto a = convex_hull({iv({0, 0}), iv({3, 0})});
  auto b = convex_hull({iv({0, 0}), iv({0, 2})});
  CHECK(mixed_volume({a, b}, fr) == 6);
  auto tri = convex_hull({iv({0, 0}), iv({2, 0}), iv({0, 2})});
  CHECK(mixed_volume({tri, tri}, fr) == normalized_volume(tri));
  // empty argument
  CHECK(mixed_volume({tri, Polyhedron::empty(2)}, fr) == 0);
  // zero-dimensional convention
  CHECK(mixed_volume({}, lattice_frame({iv({5, 5})})) == 1);
}

TEST_CASE("mixed volume is symmetric and translation invariant") {
  std::mt19937 rng(7);
  auto fr = standard_frame(2);
  for (int trial = 0; trial < 20; ++trial) {
    auto A = convex_hull(random_points(rng, 2, 4, 3));
    auto B = convex_hull(random_points(rng, 2, 4, 3));
    if (A.is_empty() || B.is_empty()) continue;
    Int ab = mixed_volume({A, B}, fr);
    CHECK(ab == mixed_volume({B, A}, fr));
    std::vector<IntVec> shifted;
    for (const auto& v : A.vertices()) shifted.push_back(vec_add(v, iv({5, 11})));
    CHECK(ab == mixed_volume({convex_hull(shifted), B}, fr));
  }
}

TEST_CASE("lattice point enumeration") {
  auto sq = convex_hull({iv({0, 0}), iv({1, 0}), iv({0, 1}), iv({1, 1})});
  CHECK(lattice_points(sq, 2).size() == 9);
  auto tri = convex_hull({iv({0, 0}), iv({2, 0}), iv({0, 2})});
  CHECK(lattice_points(tri, 1).size() == 6);
  auto seg = convex_hull({iv({2, 0}), iv({0, 3})});
  CHECK(lattice_points(seg, 1) == std::vector<IntVec>{iv({0, 3}), iv({2, 0})});
  CHECK(lattice_points(tri, 0) == std::vector<IntVec>{iv({0, 0})});
  CHECK(lattice_points(Polyhedron::empty(2), 0).empty());
}

TEST_CASE("Ehrhart polynomiality of the counting function") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 15; ++trial) {
    int n = 1 + trial % 3;
    auto P = convex_hull(random_points(rng, n, n + 2, 4));
    if (P.is_empty() || P.dim() < 1) continue;
    int d = P.dim();
    // Interpolate from the first d+1 counts via finite differences, then
    // predict the rest.
    std::vector<Int> counts;
    for (int m = 0; m <= 2 * d + 2; ++m) counts.push_back(count_lattice_points(P, m));
    std::vector<Int> diff(counts.begin(), counts.begin() + d + 1);
    for (int lvl = 1; lvl <= d; ++lvl)
      for (int i = d; i >= lvl; --i) diff[i] -= diff[i - 1];
    for (int m = 0; m <= 2 * d + 2; ++m) {
      Int predicted = 0;
      for (int k = 0; k <= d; ++k) predicted += diff[k] * binomial(Int(m), k);
      CHECK(predicted == counts[m]);
    }
  }
}

TEST_CASE("hull idempotence and facet-vertex duality") {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 25; ++trial) {
    int n = 1 + trial % 3;
    auto P = convex_hull(random_points(rng, n, 2 + trial % 5, 4));
    if (P.is_empty()) continue;
    CHECK(convex_hull(P.vertices()) == P);
    if (P.dim() != n) continue;
    for (const auto& v : P.vertices()) {
      IntMatrix tight;
      for (const auto& f : P.facets()) {
        CHECK(dot(f.normal, v) >= f.offset);
        if (dot(f.normal, v) == f.offset) tight.push_back(f.normal);
      }
      CHECK(rank_of(tight) == n);  // vertices are 0-dimensional faces
    }
  }
}

TEST_CASE("normalized volume is positive exactly in full frame dimension") {
  std::mt19937 rng(37);
  for (int trial = 0; trial < 15; ++trial) {
    int n = 1 + trial % 3;
    auto P = convex_hull(random_points(rng, n, n + 1, 4));
    if (P.is_empty()) continue;
    Int vol = normalized_volume(P, standard_frame(n));
    if (P.dim() == n)
      CHECK(vol >= 1);
    else
      CHECK(vol == 0);
  }
}

TEST_CASE("mixed volume agrees with the dilation-interpolation oracle") {
  std::mt19937 rng(41);
  auto fr2 = standard_frame(2);
  auto fr3 = standard_frame(3);
  for (int trial = 0; trial < 12; ++trial) {
    auto A = convex_hull(random_points(rng, 2, 4, 4));
    auto B = convex_hull(random_points(rng, 2, 4, 4));
    if (A.dim() < 0 || B.dim() < 0) continue;
    CHECK(mixed_volume({A, B}, fr2) ==
          oracle::mixed_volume_by_interpolation({A.vertices(), B.vertices()}));
  }
  for (int trial = 0; trial < 6; ++trial) {
    auto A = convex_hull(random_points(rng, 3, 4, 3));
    auto B = convex_hull(random_points(rng, 3, 4, 3));
    auto C = convex_hull(random_points(rng, 3, 4, 3));
    CHECK(mixed_volume({A, B, C}, fr3) ==
          oracle::mixed_volume_by_interpolation({A.vertices(), B.vertices(), C.vertices()}));
  }
}

TEST_CASE("face lattice is graded with unique top and bottom") {
  auto cube = convex_hull({iv({0, 0, 0}), iv({1, 0, 0}), iv({0, 1, 0}), iv({0, 0, 1}),
                           iv({1, 1, 0}), iv({1, 0, 1}), iv({0, 1, 1}), iv({1, 1, 1})});
  // 1 empty + 8 + 12 + 6 + 1
  CHECK(cube.face_count() == 28);
  CHECK(cube.face(0).dim == -1);
  CHECK(cube.face(cube.top_face()).dim == 3);
  int counts[5] = {0, 0, 0, 0, 0};
  for (int i = 0; i < cube.face_count(); ++i) ++counts[cube.face(i).dim + 1];
  CHECK(counts[1] == 8);
  CHECK(counts[2] == 12);
  CHECK(counts[3] == 6);
}
