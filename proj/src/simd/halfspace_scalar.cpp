#include "convexlab/simd/halfspace.hpp"

namespace convexlab::simd::detail {

void classify_scalar(const HalfspaceBlock& block, const double* soa, std::size_t stride, std::size_t count,
                     std::uint8_t* inside) {
  const std::size_t dim = block.dim;
  const std::size_t rows = block.size();
  for (std::size_t i = 0; i < count; ++i) {
    std::uint8_t ok = 1;
    for (std::size_t r = 0; r < rows; ++r) {
      const double* normal = block.normals.data() + r * dim;
      double acc = 0.0;
      for (std::size_t k = 0; k < dim; ++k) {
        double term = normal[k] * soa[k * stride + i];
        acc = acc + term;
      }
      if (!(acc <= block.offsets[r])) {
        ok = 0;
        break;
      }
    }
    inside[i] = ok;
  }
}

}  // namespace convexlab::simd::detail
