#pragma once

#include <vector>

#include "convexlab/rational.hpp"
#include "convexlab/set_models.hpp"

namespace convexlab {

using IntVector = std::vector<Integer>;

struct ConeRays {
  std::vector<IntVector> rays;  // primitive integer generators
  std::vector<Bitset> zero_sets;  // rows tight at each ray, over all input rows
};

// Extreme rays of the pointed cone { y : row . y >= 0 for every row } by the
// double description method with the combinatorial adjacency test. Rows must
// have full column rank; throws InvalidInput otherwise.
ConeRays extreme_rays(const std::vector<IntVector>& rows);

}  // namespace convexlab
