#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

// Batched point-in-polytope classification against a list of halfspaces.
//
// The scalar routine is the reference; the AVX2 routine evaluates four points
// per instruction with the same per-lane operation order (multiply, then add,
// no fused contraction), so both produce bit-identical masks.
namespace convexlab::simd {

enum class Isa { scalar, avx2 };

std::string_view name(Isa isa);
bool supported(Isa isa);
// Widest ISA supported by both the build and the running CPU.
Isa best_isa();
// ISA used by the dispatching entry points. Defaults to best_isa().
Isa active_isa();
// Overrides the dispatch choice; throws std::invalid_argument if unsupported.
void set_active_isa(Isa isa);

struct HalfspaceBlock {
  std::size_t dim = 0;
  std::vector<double> normals;  // row-major, dim entries per halfspace
  std::vector<double> offsets;  // point p is inside iff normal . p <= offset for all rows

  std::size_t size() const { return offsets.size(); }
};

// Points are stored structure-of-arrays: coordinate k of point i lives at
// soa[k * stride + i]. inside[i] is set to 1 or 0.
void classify(Isa isa, const HalfspaceBlock& block, std::span<const double> soa, std::size_t stride,
              std::size_t count, std::span<std::uint8_t> inside);
void classify(const HalfspaceBlock& block, std::span<const double> soa, std::size_t stride, std::size_t count,
              std::span<std::uint8_t> inside);

std::size_t count_inside(Isa isa, const HalfspaceBlock& block, std::span<const double> soa, std::size_t stride,
                         std::size_t count);
std::size_t count_inside(const HalfspaceBlock& block, std::span<const double> soa, std::size_t stride,
                         std::size_t count);

namespace detail {
void classify_scalar(const HalfspaceBlock& block, const double* soa, std::size_t stride, std::size_t count,
                     std::uint8_t* inside);
#if defined(CONVEXLAB_HAVE_AVX2)
void classify_avx2(const HalfspaceBlock& block, const double* soa, std::size_t stride, std::size_t count,
                   std::uint8_t* inside);
#endif
}  // namespace detail

}  // namespace convexlab::simd
