#include <doctest.h>

#include <cmath>

#include "convexlab/bundled.hpp"
#include "convexlab/errors.hpp"
#include "convexlab/geometry.hpp"
#include "convexlab/measure.hpp"
#include "oracles.hpp"

using namespace convexlab;

namespace {

MembershipOracle constant_oracle(std::size_t dim, bool value) {
  return MembershipOracle{dim, [value](std::span<const double>) { return value; }, "constant", std::nullopt};
}

}  // namespace

TEST_CASE("volume_exact") {
  for (std::size_t n = 1; n <= 6; ++n) CHECK(exact_volume(make_cube(n)) == 1);
  for (unsigned long n = 1; n <= 6; ++n) {
    const Rational L(7, 2);
    Rational expected = 1;
    for (unsigned long i = 0; i < n; ++i) expected *= L;
    CHECK(exact_volume(make_simplex(n, L)) == expected / Rational(factorial(n)));
  }
  const VolumeEstimate hex = volume_exact(difference_body(make_simplex(2, 1)));
  CHECK(hex.exact == Rational(3));
  CHECK(hex.value == 3.0);
  CHECK(hex.kind == VolumeKind::exact);
  CHECK(hex.std_error == 0.0);
  CHECK(hex.seed == 0);

  CHECK(exact_volume(VPolytope(2, {{0, 0}, {1, 1}})) == 0);
  CHECK_THROWS_AS(volume_exact(make_cube(7)), DimensionCapExceeded);
}

TEST_CASE("exact volume of random polygons matches the shoelace oracle") {
  CounterRng rng(17);
  for (int t = 0; t < 40; ++t) {
    const VPolytope p = bundled::random_body(rng, 2, 7, 9, 2);
    CHECK(exact_volume(p) == oracle::area2d(p.vertices()));
  }
}

TEST_CASE("triangulation invariance and scaling") {
  CounterRng rng(4);
  for (int t = 0; t < 10; ++t) {
    const std::size_t dim = 2 + t % 3;
    const VPolytope p = bundled::random_body(rng, dim, dim + 4, 6);
    const Rational centroid_volume = *volume_exact(p).exact;
    // Any vertex is a valid apex too.
    CHECK(*volume_exact(p, p.vertices().front()).exact == centroid_volume);
    CHECK(*volume_exact(p, p.vertices().back()).exact == centroid_volume);
    const Rational t_factor(3, 5);
    Rational tn = 1;
    for (std::size_t k = 0; k < dim; ++k) tn *= t_factor;
    CHECK(exact_volume(scale_about(p, vertex_centroid(p), t_factor)) == tn * centroid_volume);
  }
  CHECK_THROWS_AS(volume_exact(make_cube(2), QVector{5, 5}), InvalidInput);
}

TEST_CASE("volume_grid") {
  const GridSet empty(2, 1, {0, 0}, {});
  CHECK(volume_grid(empty).value == 0.0);
  std::vector<IndexTuple> cells;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k) cells.push_back({i, j, k});
  const VolumeEstimate v = volume_grid(GridSet(3, Rational(1, 2), {0, 0, 0}, cells));
  CHECK(v.exact == Rational(1));
  CHECK(v.kind == VolumeKind::grid);
  CHECK(v.std_error == 0.0);
  const VolumeEstimate tri = volume_grid(rasterize(make_simplex(2, 1), Rational(1, 200)));
  CHECK(std::abs(tri.value - 0.5) <= 0.02);
}

TEST_CASE("grid refinement error shrinks") {
  for (const VPolytope& p : {make_simplex(2, 1), bundled::random_octahedral_hull(7)}) {
    const Rational exact = exact_volume(p);
    const Rational h = p.dim() == 2 ? Rational(1, 16) : Rational(1, 8);
    const Rational coarse = abs(rasterize(p, h).measure() - exact);
    const Rational fine = abs(rasterize(p, h / 2).measure() - exact);
    CHECK(fine <= coarse * 2);
  }
}

TEST_CASE("volume_mc trivial oracles") {
  const Box box{{-1, 0}, {1, 3}};
  const VolumeEstimate all = volume_mc(constant_oracle(2, true), box, 1000, 9);
  CHECK(all.value == 6.0);
  CHECK(all.std_error == 0.0);
  CHECK(all.kind == VolumeKind::montecarlo);
  const VolumeEstimate none = volume_mc(constant_oracle(2, false), box, 1000, 9);
  CHECK(none.value == 0.0);
  CHECK_THROWS_AS(volume_mc(constant_oracle(2, true), Box{{0, 0}, {0, 1}}, 10, 1), InvalidInput);
  CHECK_THROWS_AS(volume_mc(constant_oracle(2, true), box, 0, 1), InvalidInput);
}

TEST_CASE("volume_mc of the unit disk") {
  MembershipOracle disk{2, [](std::span<const double> p) { return p[0] * p[0] + p[1] * p[1] <= 1.0; }, "disk",
                        std::nullopt};
  const VolumeEstimate v = volume_mc(disk, Box{{-1, -1}, {1, 1}}, 1'000'000, 42);
  CHECK(std::abs(v.value - M_PI) <= 3 * v.std_error);
  CHECK(v.std_error > 0.0);
  CHECK(v.samples == 1'000'000);
  CHECK(v.seed == 42);
  // Same seed, same answer; other seed, other answer.
  CHECK(volume_mc(disk, Box{{-1, -1}, {1, 1}}, 1'000'000, 42).value == v.value);
  CHECK(volume_mc(disk, Box{{-1, -1}, {1, 1}}, 1'000'000, 43).value != v.value);
}

TEST_CASE("volume_mc coverage over seeded runs") {
  const VPolytope tri = make_simplex(2, 1);
  const MembershipOracle o = make_oracle(tri);
  const Box box = bounding_box(tri);
  int covered = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const VolumeEstimate v = volume_mc(o, box, 20'000, seed);
    if (std::abs(v.value - 0.5) <= 2 * v.std_error) ++covered;
  }
  CHECK(covered >= 90);
}

TEST_CASE("sharded Monte Carlo reproduces the serial count") {
  const VPolytope p = bundled::random_octahedral_hull(7);
  const MembershipOracle o = make_oracle(p);
  const Box box = bounding_box(p);
  const VolumeEstimate serial = volume_mc(o, box, 100'003, 5, 1);
  const VolumeEstimate sharded = volume_mc(o, box, 100'003, 5, 4);
  CHECK(serial.value == sharded.value);
  CHECK(serial.std_error == sharded.std_error);
  CHECK(std::abs(serial.value - exact_volume(p).get_d()) <= 5 * serial.std_error);
}

TEST_CASE("bounding boxes and default grid step") {
  const Box b = bounding_box(make_box({-1, 2}, {3, 5}));
  CHECK(b.lo == DVector{-1, 2});
  CHECK(b.hi == DVector{3, 5});
  CHECK(b.volume() == 12.0);
  CHECK(default_grid_step(make_box({-1, 2}, {3, 5})) == Rational(3, 100));
  const GridSet g(1, Rational(1, 2), {0}, {{0}, {3}});
  const Box gb = bounding_box(g);
  CHECK(gb.lo[0] == -0.25);
  CHECK(gb.hi[0] == 1.75);
}
