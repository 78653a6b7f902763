#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "convexlab/report.hpp"
#include "convexlab/set_models.hpp"

namespace convexlab {

enum class TheoremForm {
  full,    // (1 + w + ... + w^[sqrt n]) mu(B)^(1-1/n) mu(A)^(1/n) mu(A-A) << mu(A+B)^2
  a_ge_b,  // mu(A-A) << mu(A+B)^2 / (sqrt n mu(A)^(1/n) mu(B)^(1-1/n)),  mu(A) >= mu(B)
  b_ge_a,  // mu(A-A) << mu(A+B)^2 / (sqrt n mu(A)),                       mu(B) >= mu(A)
};

std::string_view to_string(TheoremForm form);
TheoremForm parse_theorem_form(std::string_view text);

inline constexpr double kDefaultCBudget = 10.0;
inline constexpr double kLemma2Tolerance = 1e-9;

std::string describe(const VPolytope& p);
std::string describe(const GridSet& g);
std::string describe(const LatticeSet& s);

// |A - B| |C| <= |A + C| |C + B|, exact integers.
CheckReport check_ruzsa_triangle(const LatticeSet& a, const LatticeSet& b, const LatticeSet& c);

// A_x + B ⊆ (A + B)_x. lhs counts elements of A_x + B missing from (A + B)_x,
// rhs is 0. For grids, x is an index offset and the cell sizes must match.
CheckReport check_koester_katz(const LatticeSet& a, const LatticeSet& b, const IndexTuple& x);
CheckReport check_koester_katz(const GridSet& a, const GridSet& b, const IndexTuple& x);
// Every x in A - A.
CheckReport check_koester_katz_all(const LatticeSet& a, const LatticeSet& b);
CheckReport check_koester_katz_all(const GridSet& a, const GridSet& b);

// mu(A_x) >= (1-r)^n mu(A) at the given difference vectors, which must lie in r(A - A).
CheckReport check_lemma2_at(const VPolytope& a, const Rational& r, const std::vector<QVector>& xs);
// x = r (a1 - a2) with a1, a2 drawn uniformly from A by rejection from its bounding box.
CheckReport check_lemma2(const VPolytope& a, const Rational& r, std::size_t trials, std::uint64_t seed);

// Midpoint quadrature of the integral of mu(A_x + B) over the cells of step hx
// whose centers lie in A - A, against mu(A + B)^2. n <= 3.
CheckReport check_lemma1(const VPolytope& a, const VPolytope& b, const Rational& hx);
// Grid B: A is rasterized at B's cell size (hx must equal it) and the
// inequality is checked in its exact discrete form on the voxel lattice.
CheckReport check_lemma1(const VPolytope& a, const GridSet& b, const Rational& hx);

// mu(A)^(1/n) + mu(B)^(1/n) <= mu(A+B)^(1/n) with directed rounding, falling
// back to an exact comparison when the enclosures touch.
CheckReport check_brunn_minkowski(const VPolytope& a, const VPolytope& b);

CheckReport check_theorem(const VPolytope& a, const VPolytope& b, TheoremForm form, double c_budget = kDefaultCBudget);
CheckReport check_theorem(const VPolytope& a, const GridSet& b, TheoremForm form, double c_budget = kDefaultCBudget);

}  // namespace convexlab
