#include <doctest.h>

#include "convexlab/errors.hpp"
#include "convexlab/geometry.hpp"
#include "convexlab/measure.hpp"
#include "convexlab/set_models.hpp"

using namespace convexlab;

TEST_CASE("make_simplex") {
  const VPolytope seg = make_simplex(1, 1);
  CHECK(seg.vertices().size() == 2);
  CHECK(exact_volume(seg) == 1);
  const VPolytope tri = make_simplex(2, 1);
  CHECK(tri.full_dim());
  CHECK(exact_volume(tri) == Rational(1, 2));
  // L^n / n!
  CHECK(exact_volume(make_simplex(3, 1)) == Rational(1, 6));
  CHECK(exact_volume(make_simplex(4, Rational(3, 2))) == Rational(81, 16) / 24);
  CHECK_THROWS_AS(make_simplex(0, 1), InvalidInput);
  CHECK_THROWS_AS(make_simplex(2, 0), InvalidInput);
  CHECK_THROWS_AS(make_simplex(2, -1), InvalidInput);
}

TEST_CASE("vertex lists are deduplicated and dimension-checked") {
  VPolytope p(2, {{0, 0}, {1, 0}, {0, 0}, {0, 1}});
  CHECK(p.vertices().size() == 3);
  CHECK_THROWS_AS(VPolytope(2, {{0, 0}, {1}}), InvalidInput);
  CHECK_THROWS_AS(VPolytope(2, {}), InvalidInput);
  VPolytopeF f(1, {{0.0}, {1e-12}, {1.0}});
  CHECK(f.vertices().size() == 2);
}

TEST_CASE("reflect") {
  const VPolytope seg = make_box({0}, {1});
  CHECK(reflect(seg) == make_box({-1}, {0}));
  const VPolytope tri = make_simplex(2, 1);
  CHECK(reflect(tri) == VPolytope(2, {{0, 0}, {-1, 0}, {0, -1}}));
  CHECK(reflect(reflect(tri)) == tri);
  CHECK(exact_volume(reflect(tri)) == exact_volume(tri));

  const GridSet g(2, Rational(1, 2), {Rational(1, 4), 0}, {{0, 0}, {1, 2}, {3, -1}});
  const GridSet rg = reflect(g);
  CHECK(rg.measure() == g.measure());
  CHECK(reflect(rg).cells() == g.cells());
  CHECK(reflect(rg).origin() == g.origin());
  // Cell (1, 2) has center (3/4, 1); its mirror is (-3/4, -1).
  CHECK(rg.center({-1, -2}) == QVector{Rational(-3, 4), -1});

  const LatticeSet s(1, {{0}, {2}, {5}});
  CHECK(reflect(s) == LatticeSet(1, {{-5}, {-2}, {0}}));
  CHECK(reflect(reflect(s)) == s);
}

TEST_CASE("scale_about") {
  const VPolytope sq = make_cube(2);
  const QVector c = vertex_centroid(sq);
  CHECK(scale_about(sq, c, 1) == sq);
  const VPolytope point = scale_about(sq, c, 0);
  CHECK(point.vertices().size() == 1);
  CHECK_FALSE(point.full_dim());
  const VPolytope half = scale_about(sq, c, Rational(1, 2));
  CHECK(exact_volume(half) == Rational(1, 4));
  CHECK(half == make_box({Rational(1, 4), Rational(1, 4)}, {Rational(3, 4), Rational(3, 4)}));
  // t^n on a skew body.
  const VPolytope skew(3, {{0, 0, 0}, {2, 0, 1}, {0, 3, 0}, {1, 1, 4}, {1, 0, 0}});
  CHECK(exact_volume(scale_about(skew, vertex_centroid(skew), Rational(2, 3))) ==
        exact_volume(skew) * Rational(8, 27));
  CHECK_THROWS_AS(scale_about(sq, c, Rational(3, 2)), InvalidInput);
  CHECK_THROWS_AS(scale_about(sq, c, -1), InvalidInput);
}

TEST_CASE("rasterize") {
  const GridSet g = rasterize(make_cube(2), Rational(1, 2));
  CHECK(g.size() == 4);
  CHECK(g.measure() == 1);
  CHECK(g.center({0, 0}) == QVector{Rational(1, 4), Rational(1, 4)});

  // A single point: its cell is occupied only when the point is a center.
  const GridSet on_center = rasterize(VPolytope(2, {{Rational(1, 4), Rational(1, 4)}}), Rational(1, 2));
  CHECK(on_center.size() == 1);
  const GridSet off_center = rasterize(VPolytope(2, {{0, 0}}), Rational(1, 2));
  CHECK(off_center.measure() == 0);

  const GridSet tri = rasterize(make_simplex(2, 1), Rational(1, 100));
  CHECK(abs(tri.measure() - Rational(1, 2)) <= Rational(1, 20));
}

TEST_CASE("rasterized measure converges on convex bodies") {
  const std::vector<VPolytope> bodies{make_simplex(2, 1), VPolytope(2, {{0, 0}, {3, 1}, {1, 2}}),
                                      make_simplex(3, 1)};
  for (const auto& p : bodies) {
    const Rational exact = exact_volume(p);
    Rational previous_error = -1;
    for (const Rational& h : {Rational(1, 8), Rational(1, 16), Rational(1, 32)}) {
      const Rational err = abs(rasterize(p, h).measure() - exact);
      if (previous_error >= 0) CHECK(err <= previous_error * 4);
      previous_error = err;
    }
  }
}

TEST_CASE("grid set algebra requires aligned frames") {
  const GridSet a(1, 1, {0}, {{0}, {1}});
  const GridSet b(1, 1, {0}, {{1}, {2}});
  CHECK(unite(a, b).size() == 3);
  CHECK(intersect(a, b).size() == 1);
  CHECK(translate(a, {5}).cells() == std::vector<IndexTuple>{{5}, {6}});
  // Origins differing by a whole number of cells are rebased exactly.
  const GridSet shifted(1, 1, {3}, {{-3}, {-2}});
  CHECK(intersect(a, shifted).size() == 2);
  const GridSet misaligned(1, 1, {Rational(1, 2)}, {{0}});
  CHECK_THROWS_AS(unite(a, misaligned), ResolutionMismatch);
  const GridSet finer(1, Rational(1, 2), {0}, {{0}});
  CHECK_THROWS_AS(intersect(a, finer), ResolutionMismatch);
}

TEST_CASE("lattice set operations") {
  const LatticeSet a(1, {{0}, {1}});
  const LatticeSet c(1, {{0}, {2}});
  CHECK(sumset(a, c).size() == 4);
  CHECK(difference_set(a, a).size() == 3);
  CHECK(intersect(a, c).size() == 1);
  CHECK(translate(a, {-1}) == LatticeSet(1, {{-1}, {0}}));
}
