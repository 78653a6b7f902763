#include <immintrin.h>

#include "convexlab/simd/halfspace.hpp"

namespace convexlab::simd::detail {

void classify_avx2(const HalfspaceBlock& block, const double* soa, std::size_t stride, std::size_t count,
                   std::uint8_t* inside) {
  const std::size_t dim = block.dim;
  const std::size_t rows = block.size();
  std::size_t i = 0;
  for (; i + 4 <= count; i += 4) {
    __m256d all = _mm256_castsi256_pd(_mm256_set1_epi64x(-1));
    for (std::size_t r = 0; r < rows; ++r) {
      const double* normal = block.normals.data() + r * dim;
      __m256d acc = _mm256_setzero_pd();
      for (std::size_t k = 0; k < dim; ++k) {
        __m256d coord = _mm256_loadu_pd(soa + k * stride + i);
        __m256d term = _mm256_mul_pd(_mm256_set1_pd(normal[k]), coord);
        acc = _mm256_add_pd(acc, term);
      }
      __m256d le = _mm256_cmp_pd(acc, _mm256_set1_pd(block.offsets[r]), _CMP_LE_OQ);
      all = _mm256_and_pd(all, le);
      if (_mm256_movemask_pd(all) == 0) break;
    }
    const int mask = _mm256_movemask_pd(all);
    inside[i + 0] = static_cast<std::uint8_t>(mask & 1);
    inside[i + 1] = static_cast<std::uint8_t>((mask >> 1) & 1);
    inside[i + 2] = static_cast<std::uint8_t>((mask >> 2) & 1);
    inside[i + 3] = static_cast<std::uint8_t>((mask >> 3) & 1);
  }
  if (i < count) classify_scalar(block, soa + i, stride, count - i, inside + i);
}

}  // namespace convexlab::simd::detail
