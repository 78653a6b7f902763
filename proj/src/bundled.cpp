#include "convexlab/bundled.hpp"

#include "convexlab/geometry.hpp"

namespace convexlab::bundled {

VPolytope unit_square() { return make_cube(2); }

VPolytope unit_triangle() { return make_simplex(2, 1); }

VPolytope random_octahedral_hull(std::uint64_t seed) {
  CounterRng rng(seed);
  while (true) {
    VPolytope p = random_polytope(rng, 3, 8, 16);
    if (p.full_dim() && p.vertices().size() == 8) return p;
  }
}

GridSet l_shape(const Rational& h) {
  const std::int64_t m = floor(Rational(1) / h).get_si();
  std::vector<IndexTuple> cells;
  for (std::int64_t i = 0; i < m; ++i) {
    for (std::int64_t j = 0; j < m; ++j) {
      if (2 * i >= m && 2 * j >= m) continue;
      cells.push_back({i, j});
    }
  }
  return GridSet(2, h, QVector(2, h / 2), std::move(cells));
}

std::vector<ConvexPair> theorem_pairs() {
  return {
      {"segment+segment", make_box({0}, {1}), make_box({0}, {2})},
      {"square+triangle", unit_square(), unit_triangle()},
      {"triangle+large square", unit_triangle(), make_cube(2, 3)},
      {"tetrahedron+cube", make_simplex(3, 1), make_cube(3)},
      {"random hull+small cube", random_octahedral_hull(7), make_cube(3, Rational(1, 4))},
      {"simplex4+cube4", make_simplex(4, 2), make_cube(4)},
      {"simplex5+simplex5", make_simplex(5, 1), make_simplex(5, 1)},
      {"cube5+simplex5", make_cube(5), make_simplex(5, 1)},
  };
}

std::vector<GridPair> theorem_grid_pairs() { return {{"triangle+L-shape", unit_triangle(), l_shape()}}; }

std::vector<ConvexPair> lemma1_pairs() {
  return {
      {"unit interval", make_box({0}, {1}), make_box({0}, {1})},
      {"interval+long interval", make_box({0}, {1}), make_box({0}, {3})},
      {"square+triangle", unit_square(), unit_triangle()},
      {"triangle+square", unit_triangle(), unit_square()},
  };
}

std::vector<GridPair> lemma1_grid_pairs() { return {{"triangle+L-shape", unit_triangle(), l_shape()}}; }

std::vector<NamedBody> lemma2_bodies() {
  return {{"square", unit_square()}, {"triangle", unit_triangle()}, {"random 8-vertex hull", random_octahedral_hull(7)}};
}

LatticeSet random_lattice_set(CounterRng& rng, std::size_t dim, std::size_t max_points, std::int64_t radius) {
  const auto count = static_cast<std::size_t>(rng.uniform_int(1, static_cast<std::int64_t>(max_points)));
  std::vector<IndexTuple> points;
  for (std::size_t i = 0; i < count; ++i) {
    IndexTuple p(dim);
    for (auto& x : p) x = rng.uniform_int(-radius, radius);
    points.push_back(std::move(p));
  }
  return LatticeSet(dim, std::move(points));
}

VPolytope random_polytope(CounterRng& rng, std::size_t dim, std::size_t points, long denominator, long scale) {
  std::vector<QVector> pts;
  for (std::size_t i = 0; i < points; ++i) {
    QVector p(dim);
    for (auto& x : p) x = Rational(rng.uniform_int(0, denominator * scale), denominator);
    pts.push_back(std::move(p));
  }
  for (auto& p : pts) {
    for (auto& x : p) x.canonicalize();
  }
  return convex_hull(pts);
}

VPolytope random_body(CounterRng& rng, std::size_t dim, std::size_t points, long denominator, long scale) {
  while (true) {
    VPolytope p = random_polytope(rng, dim, points, denominator, scale);
    if (p.full_dim()) return p;
  }
}

}  // namespace convexlab::bundled
