#include <algorithm>
#include <atomic>
#include <stdexcept>
#include <string>

#include "convexlab/simd/halfspace.hpp"

namespace convexlab::simd {

namespace {

std::atomic<int> g_active{-1};

void check_shapes(const HalfspaceBlock& block, std::span<const double> soa, std::size_t stride, std::size_t count,
                  std::span<std::uint8_t> inside) {
  if (block.normals.size() != block.dim * block.size()) throw std::invalid_argument("halfspace block is ragged");
  if (count > stride) throw std::invalid_argument("point count exceeds stride");
  if (block.dim > 0 && soa.size() < (block.dim - 1) * stride + count) throw std::invalid_argument("coordinate buffer too small");
  if (inside.size() < count) throw std::invalid_argument("mask buffer too small");
}

}  // namespace

std::string_view name(Isa isa) { return isa == Isa::avx2 ? "avx2" : "scalar"; }

bool supported(Isa isa) {
  switch (isa) {
    case Isa::scalar:
      return true;
    case Isa::avx2:
#if defined(CONVEXLAB_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
      return __builtin_cpu_supports("avx2");
#else
      return false;
#endif
  }
  return false;
}

Isa best_isa() { return supported(Isa::avx2) ? Isa::avx2 : Isa::scalar; }

Isa active_isa() {
  int v = g_active.load(std::memory_order_relaxed);
  if (v < 0) {
    v = static_cast<int>(best_isa());
    g_active.store(v, std::memory_order_relaxed);
  }
  return static_cast<Isa>(v);
}

void set_active_isa(Isa isa) {
  if (!supported(isa)) throw std::invalid_argument("ISA not available: " + std::string(name(isa)));
  g_active.store(static_cast<int>(isa), std::memory_order_relaxed);
}

void classify(Isa isa, const HalfspaceBlock& block, std::span<const double> soa, std::size_t stride,
              std::size_t count, std::span<std::uint8_t> inside) {
  check_shapes(block, soa, stride, count, inside);
  if (count == 0) return;
#if defined(CONVEXLAB_HAVE_AVX2)
  if (isa == Isa::avx2) {
    if (!supported(Isa::avx2)) throw std::invalid_argument("ISA not available: avx2");
    detail::classify_avx2(block, soa.data(), stride, count, inside.data());
    return;
  }
#else
  if (isa == Isa::avx2) throw std::invalid_argument("ISA not available: avx2");
#endif
  detail::classify_scalar(block, soa.data(), stride, count, inside.data());
}

void classify(const HalfspaceBlock& block, std::span<const double> soa, std::size_t stride, std::size_t count,
              std::span<std::uint8_t> inside) {
  classify(active_isa(), block, soa, stride, count, inside);
}

std::size_t count_inside(Isa isa, const HalfspaceBlock& block, std::span<const double> soa, std::size_t stride,
                         std::size_t count) {
  constexpr std::size_t kChunk = 1024;
  std::uint8_t mask[kChunk];
  std::size_t hits = 0;
  for (std::size_t start = 0; start < count; start += kChunk) {
    std::size_t n = std::min(kChunk, count - start);
    classify(isa, block, soa.subspan(start), stride, n, std::span<std::uint8_t>(mask, n));
    for (std::size_t i = 0; i < n; ++i) hits += mask[i];
  }
  return hits;
}

std::size_t count_inside(const HalfspaceBlock& block, std::span<const double> soa, std::size_t stride,
                         std::size_t count) {
  return count_inside(active_isa(), block, soa, stride, count);
}

}  // namespace convexlab::simd
