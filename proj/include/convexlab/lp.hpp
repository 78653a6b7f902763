#pragma once

#include <vector>

#include "convexlab/rational.hpp"

namespace convexlab {

// Exact feasibility of { lambda >= 0 : sum lambda_i points_i = p, sum lambda_i = 1 }
// by a phase-one simplex with Bland's rule over the rationals.
bool in_convex_hull(const std::vector<QVector>& points, const QVector& p);

}  // namespace convexlab
