#pragma once

#include <cstdint>
#include <vector>

#include "convexlab/report.hpp"

namespace convexlab {

// Bundled regression set: every inequality of the note, the sigma chain and
// the simplex example. Reports come back sorted by name.
std::vector<CheckReport> run_suite(std::uint64_t seed, std::uint64_t samples);

}  // namespace convexlab
