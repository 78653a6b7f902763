#pragma once

#include <string>
#include <vector>

#include "convexlab/random.hpp"
#include "convexlab/set_models.hpp"

// Fixed regression inputs and seeded generators shared by the suite and tests.
namespace convexlab::bundled {

struct ConvexPair {
  std::string name;
  VPolytope a;
  VPolytope b;
};

struct GridPair {
  std::string name;
  VPolytope a;
  GridSet b;
};

struct NamedBody {
  std::string name;
  VPolytope body;
};

VPolytope unit_square();
VPolytope unit_triangle();
// Hull of random rational points in [0,1]^3 with exactly 8 vertices.
VPolytope random_octahedral_hull(std::uint64_t seed);
// L-shaped voxel set: [0,1]^2 without its upper right quarter, cell 1/4.
GridSet l_shape(const Rational& h = Rational(1, 4));

std::vector<ConvexPair> theorem_pairs();  // n <= 5
std::vector<GridPair> theorem_grid_pairs();
std::vector<ConvexPair> lemma1_pairs();   // n in {1, 2}
std::vector<GridPair> lemma1_grid_pairs();
std::vector<NamedBody> lemma2_bodies();

// Up to max_points distinct points of [-radius, radius]^dim, at least one.
LatticeSet random_lattice_set(CounterRng& rng, std::size_t dim, std::size_t max_points, std::int64_t radius);
// Hull of `points` random points with coordinates k/denominator in [0, scale].
VPolytope random_polytope(CounterRng& rng, std::size_t dim, std::size_t points, long denominator, long scale = 1);
// Full-dimensional version: redraws until the hull has positive volume.
VPolytope random_body(CounterRng& rng, std::size_t dim, std::size_t points, long denominator, long scale = 1);

}  // namespace convexlab::bundled
