#include <doctest.h>

#include "convexlab/bundled.hpp"
#include "convexlab/errors.hpp"
#include "convexlab/geometry.hpp"
#include "convexlab/measure.hpp"
#include "oracles.hpp"

using namespace convexlab;

namespace {

std::vector<QVector> sorted(std::vector<QVector> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

TEST_CASE("convex_hull drops interior and boundary points") {
  const VPolytope sq = convex_hull({{0, 0}, {1, 0}, {0, 1}, {1, 1}, {Rational(1, 2), Rational(1, 2)}, {Rational(1, 2), 0}});
  CHECK(sq == make_cube(2));
  const VPolytope seg = convex_hull({{0}, {Rational(1, 2)}, {1}});
  CHECK(seg.vertices() == std::vector<QVector>{{0}, {1}});

  std::vector<QVector> pts = make_simplex(3, 1).vertices();
  const auto corners = pts;
  for (std::size_t i = 0; i < corners.size(); ++i) {
    for (std::size_t j = i + 1; j < corners.size(); ++j) {
      QVector m(3);
      for (int k = 0; k < 3; ++k) m[k] = (corners[i][k] + corners[j][k]) / 2;
      pts.push_back(m);
    }
  }
  const VPolytope hull = convex_hull(pts);
  CHECK(sorted(hull.vertices()) == sorted(oracle::extreme_points(pts)));
  CHECK(hull == make_simplex(3, 1));
  CHECK_THROWS_AS(convex_hull({}), InvalidInput);
}

TEST_CASE("convex_hull agrees with the brute-force extreme point oracle") {
  CounterRng rng(11);
  for (int t = 0; t < 25; ++t) {
    const std::size_t dim = 1 + t % 3;
    std::vector<QVector> pts;
    for (int i = 0; i < 9; ++i) {
      QVector p(dim);
      for (auto& x : p) x = Rational(rng.uniform_int(0, 4), 2);
      pts.push_back(p);
    }
    CHECK(sorted(convex_hull(pts).vertices()) == sorted(oracle::extreme_points(pts)));
  }
}

TEST_CASE("convex_hull of lower-dimensional clouds") {
  // A square lying in the plane z = x.
  const VPolytope p = convex_hull({{0, 0, 0}, {1, 0, 1}, {0, 1, 0}, {1, 1, 1}, {Rational(1, 2), Rational(1, 2), Rational(1, 2)}});
  CHECK_FALSE(p.full_dim());
  CHECK(p.vertices().size() == 4);
  CHECK(exact_volume(p) == 0);
}

TEST_CASE("minkowski_sum") {
  const VPolytope sq = make_cube(2);
  const VPolytope two = minkowski_sum(sq, sq);
  CHECK(two == make_cube(2, 2));
  CHECK(exact_volume(two) == 4);

  const VPolytope tri = make_simplex(2, 1);
  CHECK(minkowski_sum(tri, tri) == make_simplex(2, 2));
  CHECK(exact_volume(minkowski_sum(tri, tri)) == 2);

  const VPolytope hex = minkowski_sum(tri, reflect(tri));
  CHECK(sorted(hex.vertices()) == sorted({{1, 0}, {-1, 0}, {0, 1}, {0, -1}, {1, -1}, {-1, 1}}));
  CHECK(exact_volume(hex) == 3);
  CHECK(exact_volume(hex) == oracle::area2d(hex.vertices()));
  CHECK_THROWS_AS(minkowski_sum(sq, make_cube(3)), InvalidInput);
}

TEST_CASE("minkowski sums of random polygons match the shoelace oracle") {
  CounterRng rng(5);
  for (int t = 0; t < 30; ++t) {
    const VPolytope p = bundled::random_body(rng, 2, 5, 6, 2);
    const VPolytope q = bundled::random_body(rng, 2, 4, 5, 3);
    const VPolytope s = minkowski_sum(p, q);
    const auto reference = oracle::pairwise_sums(p.vertices(), q.vertices());
    CHECK(sorted(s.vertices()) == sorted(oracle::hull2d(reference)));
    CHECK(exact_volume(s) == oracle::area2d(reference));
    // Commutativity and translation equivariance.
    CHECK(minkowski_sum(q, p) == s);
    const QVector v{Rational(1, 3), -2};
    CHECK(minkowski_sum(translate(p, v), q) == translate(s, v));
  }
}

TEST_CASE("grid_minkowski") {
  const GridSet g(2, 1, {0, 0}, {{0, 0}, {2, 1}, {-1, 3}});
  const GridSet unit(2, 1, {0, 0}, {{0, 0}});
  CHECK(grid_minkowski(unit, g).cells() == g.cells());

  const GridSet sq(2, 1, {Rational(1, 2), Rational(1, 2)}, {{0, 0}, {0, 1}, {1, 0}, {1, 1}});
  const GridSet block = grid_minkowski(sq, sq);
  CHECK(block.size() == 9);
  CHECK(block.origin() == QVector{1, 1});

  const GridSet d = grid_minkowski(g, reflect(g));
  const IndexTuple zero{0, 0};
  // Frame origin is 0 here, so index 0 is the cell centered at the origin.
  CHECK(d.contains(zero));

  const GridSet finer(2, Rational(1, 2), {0, 0}, {{0, 0}});
  CHECK_THROWS_AS(grid_minkowski(g, finer), ResolutionMismatch);
}

TEST_CASE("grid and exact Minkowski volumes agree as h shrinks") {
  const VPolytope p = make_simplex(2, 1);
  const VPolytope q(2, {{0, 0}, {1, 0}, {1, 1}, {0, 1}});
  const Rational exact = exact_volume(minkowski_sum(p, q));
  auto error_at = [&](const Rational& h) -> Rational {
    return abs(grid_minkowski(rasterize(p, h), rasterize(q, h)).measure() - exact);
  };
  const Rational coarse = error_at(Rational(1, 10));
  const Rational fine = error_at(Rational(1, 40));
  CHECK(fine * Rational(3, 2) <= coarse);
}

TEST_CASE("difference_body") {
  CHECK(difference_body(make_box({0}, {1})) == make_box({-1}, {1}));
  CHECK(exact_volume(difference_body(make_simplex(2, 1))) == 3);
  CounterRng rng(3);
  for (int t = 0; t < 5; ++t) {
    const VPolytope p = bundled::random_body(rng, 3, 6, 4);
    const VPolytope d = difference_body(p);
    CHECK(d == reflect(d));
  }
  const LatticeSet s(1, {{0}, {1}, {3}});
  CHECK(difference_body(s).size() == 7);
  const GridSet g(1, 1, {Rational(1, 2)}, {{0}, {2}});
  CHECK(difference_body(g).cells() == std::vector<IndexTuple>{{-2}, {0}, {2}});
}

TEST_CASE("facet_enum and vertex_enum") {
  const HPolytope sq = facet_enum(make_cube(2));
  CHECK(sq.halfspaces().size() == 4);
  for (unsigned long n = 1; n <= 5; ++n) {
    const VPolytope s = make_simplex(n, Rational(5, 2));
    const HPolytope h = facet_enum(s);
    CHECK(h.halfspaces().size() == n + 1);
    for (const auto& v : s.vertices()) CHECK(h.contains(v));
    auto back = vertex_enum(h);
    REQUIRE(back);
    CHECK(*back == s);
  }
  CounterRng rng(21);
  for (int t = 0; t < 10; ++t) {
    const VPolytope p = bundled::random_body(rng, 3, 9, 5);
    auto back = vertex_enum(facet_enum(p));
    REQUIRE(back);
    CHECK(*back == p);
  }
  // Points just outside the cube violate some facet.
  const HPolytope cube = facet_enum(make_cube(3));
  CHECK_FALSE(cube.contains({Rational(1, 2), Rational(1, 2), Rational(101, 100)}));
  CHECK_THROWS_AS(facet_enum(make_cube(7)), DimensionCapExceeded);
  CHECK_THROWS_AS(facet_enum(VPolytope(2, {{0, 0}, {1, 1}})), InvalidInput);
  // Empty system.
  const HPolytope empty(1, {{{1}, 0}, {{-1}, -1}}, true);
  CHECK_FALSE(vertex_enum(empty).has_value());
}

TEST_CASE("slice_body") {
  const HPolytope seg = facet_enum(make_box({0}, {1}));
  auto a0 = vertex_enum(slice_body(seg, {0}));
  REQUIRE(a0);
  CHECK(*a0 == make_box({0}, {1}));
  auto half = vertex_enum(slice_body(seg, {Rational(1, 2)}));
  REQUIRE(half);
  CHECK(exact_volume(*half) == Rational(1, 2));
  CHECK(*half == make_box({0}, {Rational(1, 2)}));

  const HPolytope tri = facet_enum(make_simplex(2, 1));
  auto corner = vertex_enum(slice_body(tri, {1, 0}));
  REQUIRE(corner);
  CHECK(corner->vertices().size() == 1);
  CHECK_FALSE(corner->full_dim());
  CHECK(exact_volume(*corner) == 0);
  // Outside A - A the slice is empty.
  CHECK_FALSE(vertex_enum(slice_body(tri, {1, 1})).has_value());
}

TEST_CASE("slices never exceed the body") {
  const VPolytope a = bundled::random_octahedral_hull(7);
  const HPolytope h = facet_enum(a);
  const Rational va = exact_volume(a);
  CounterRng rng(8);
  for (int t = 0; t < 20; ++t) {
    QVector x(3);
    for (auto& c : x) c = Rational(rng.uniform_int(-8, 8), 16);
    auto s = vertex_enum(slice_body(h, x));
    if (s) CHECK(exact_volume(*s) <= va);
  }
}

TEST_CASE("membership") {
  const VPolytope tri = make_simplex(2, 1);
  CHECK(membership(tri, vertex_centroid(tri)));
  CHECK(membership(tri, {1, 0}));
  CHECK(membership(tri, {Rational(1, 2), Rational(1, 2)}));
  CHECK_FALSE(membership(tri, {Rational(1, 2), Rational(51, 100)}));
  CHECK_FALSE(membership(tri, {5, 5}));
  // Lower-dimensional polytope: a segment in the plane.
  const VPolytope seg(2, {{0, 0}, {2, 2}});
  CHECK(membership(seg, {1, 1}));
  CHECK_FALSE(membership(seg, {1, 0}));

  const VPolytopeF f = to_float(tri);
  CHECK(membership(f, {0.25, 0.25}));
  CHECK_FALSE(membership(f, {0.75, 0.5}));

  const MembershipOracle o = make_oracle(tri);
  CHECK(o.test(std::vector<double>{0.2, 0.2}));
  CHECK_FALSE(o.test(std::vector<double>{0.6, 0.6}));
  CHECK(o.halfspaces.has_value());
}

TEST_CASE("select_subset_of_measure for convex bodies") {
  const VPolytope big = make_cube(2, 2);
  auto same = select_subset_of_measure(big, 4);
  CHECK(same.subset == big);
  CHECK(same.exact);

  auto sel = select_subset_of_measure(big, 1);
  CHECK(sel.exact);
  CHECK(sel.factor == Rational(1, 2));
  CHECK(sel.subset == make_box({Rational(1, 2), Rational(1, 2)}, {Rational(3, 2), Rational(3, 2)}));
  CHECK(exact_volume(sel.subset) == 1);

  // Irrational factor: measure slightly below target, still inside B.
  auto approx = select_subset_of_measure(big, 2);
  CHECK_FALSE(approx.exact);
  CHECK(approx.measure <= 2);
  CHECK(approx.residual >= 0);
  CHECK(approx.residual < Rational(1, 1000000000));
  const HPolytope hb = facet_enum(big);
  for (const auto& v : approx.subset.vertices()) CHECK(hb.contains(v));

  CHECK_THROWS_AS(select_subset_of_measure(big, 5), InvalidInput);
  CHECK_THROWS_AS(select_subset_of_measure(big, 0), InvalidInput);
}

TEST_CASE("select_subset_of_measure for grids") {
  std::vector<IndexTuple> cells;
  for (int i = 0; i < 10; ++i) cells.push_back({9 - i});
  const GridSet g(1, 1, {0}, cells);
  auto sel = select_subset_of_measure(g, 4);
  CHECK(sel.subset.cells() == std::vector<IndexTuple>{{0}, {1}, {2}, {3}});
  CHECK(sel.measure == 4);
  CHECK(sel.exact);
  auto partial = select_subset_of_measure(g, Rational(9, 2));
  CHECK(partial.subset.size() == 4);
  CHECK(partial.residual == Rational(1, 2));
  CHECK_FALSE(partial.exact);
  for (const auto& c : partial.subset.cells()) CHECK(g.contains(c));
}
