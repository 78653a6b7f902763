#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "convexlab/geometry.hpp"
#include "convexlab/rational.hpp"
#include "convexlab/set_models.hpp"

namespace convexlab {

enum class VolumeKind { exact, grid, montecarlo };

std::string_view to_string(VolumeKind kind);

struct VolumeEstimate {
  double value = 0.0;
  std::optional<Rational> exact;  // set for exact and grid kinds
  VolumeKind kind = VolumeKind::exact;
  double std_error = 0.0;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
};

struct Box {
  DVector lo;
  DVector hi;

  std::size_t dim() const { return lo.size(); }
  double volume() const;
};

Box bounding_box(const VPolytope& p);
Box bounding_box(const GridSet& g);

inline constexpr std::uint64_t kDefaultSamples = 1'000'000;

// Exact volume: cone from `apex` (default: vertex centroid) over a pulling
// triangulation of every facet, each simplex contributing |det| / n!.
// Lower-dimensional polytopes have volume 0. The apex must lie in P.
VolumeEstimate volume_exact(const VPolytope& p, const std::optional<QVector>& apex = std::nullopt);
Rational exact_volume(const VPolytope& p);

VolumeEstimate volume_grid(const GridSet& g);

// vol(box) * hits / samples with sample i drawn from the counter stream at
// (seed, i * dim + k). Splitting across `workers` threads gives the same hit
// count as a serial run.
VolumeEstimate volume_mc(const MembershipOracle& oracle, const Box& box, std::uint64_t samples, std::uint64_t seed,
                         unsigned workers = 1);

// Number of hits only; exposed so tests can compare kernel and per-point paths.
std::uint64_t count_hits(const MembershipOracle& oracle, const Box& box, std::uint64_t first, std::uint64_t count,
                         std::uint64_t seed, bool use_kernel = true);

// Step giving at least 100 cells along every axis of the bounding box.
Rational default_grid_step(const VPolytope& p);

// Simplices (as vertex-index tuples of length dim) of the pulling
// triangulation of the facets; exposed for tests.
std::vector<std::vector<std::size_t>> facet_triangulation(const VPolytope& p);

}  // namespace convexlab
