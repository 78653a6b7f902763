#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "convexlab/rational.hpp"
#include "convexlab/set_models.hpp"
#include "convexlab/simd/halfspace.hpp"

namespace convexlab {

// Deterministic point-membership test with a provenance string. When
// `halfspaces` is set, the batched kernel over it gives the same answers as
// `test`; volume estimators use it for throughput.
struct MembershipOracle {
  std::size_t dim = 0;
  std::function<bool(std::span<const double>)> test;
  std::string description;
  std::optional<simd::HalfspaceBlock> halfspaces;
};

MembershipOracle make_oracle(const VPolytope& p, std::string description = "vpolytope");
MembershipOracle make_oracle(const HPolytope& h, std::string description = "hpolytope");
MembershipOracle make_oracle(const GridSet& g, std::string description = "grid");

// Minimal vertex set of conv(points); exact, any affine dimension.
VPolytope convex_hull(const std::vector<QVector>& points);

VPolytope minkowski_sum(const VPolytope& p, const VPolytope& q);

// Dilation on the voxel lattice: cell i of g1 and cell j of g2 give cell i+j of
// the result, whose origin is the sum of the origins. Cell sizes must match.
GridSet grid_minkowski(const GridSet& g1, const GridSet& g2);

VPolytope difference_body(const VPolytope& p);
GridSet difference_body(const GridSet& g);
LatticeSet difference_body(const LatticeSet& s);

// Used by VPolytope::facet_data(); prefer that accessor, which caches.
FacetData compute_facet_data(const VPolytope& p);

// Irredundant halfspace description of a full-dimensional polytope with
// dim <= kFacetDimCap.
HPolytope facet_enum(const VPolytope& p);

// Vertices of a bounded H-polytope; nullopt when it is empty.
std::optional<VPolytope> vertex_enum(const HPolytope& h);

// A ∩ (A - x), keeping every halfspace (no redundancy pruning).
HPolytope slice_body(const HPolytope& a, const QVector& x);

bool membership(const VPolytope& p, const QVector& point);
bool membership(const VPolytopeF& p, const DVector& point);

template <class Body>
struct SubsetSelection {
  Body subset;
  Rational measure;
  Rational residual;  // target - measure
  std::optional<Rational> factor;  // homothety factor for convex bodies
  bool exact = false;  // measure == target
};

// Convex B: homothety about the vertex centroid with t = (target / mu(B))^(1/n).
// The factor is exact when the ratio is a perfect n-th power and otherwise the
// largest 128-bit dyadic not exceeding the true root, so measure <= target.
SubsetSelection<VPolytope> select_subset_of_measure(const VPolytope& b, const Rational& target);

// Grid B: keeps the first max(1, floor(target / h^n)) cells in lexicographic
// order; |residual| < h^n.
SubsetSelection<GridSet> select_subset_of_measure(const GridSet& b, const Rational& target);

}  // namespace convexlab
