#pragma once

#include <optional>
#include <vector>

#include "convexlab/rational.hpp"
#include "convexlab/report.hpp"

namespace convexlab {

struct SimplexReport {
  unsigned long n = 0;
  Rational L;
  Rational vol_a, vol_sum, vol_diff;
  Rational sum_ratio, diff_ratio;
  double tightness = 0.0;  // diffRatio sqrt(n) / 4^n
  bool kernel_verified = false;
  std::size_t sum_vertices = 0, diff_vertices = 0;
};

// Exact kernel volumes of simplex(n, L), its Minkowski self-sum and its
// difference body. Above the facet cap the closed forms are reported instead.
SimplexReport simplex_report(unsigned long n, const Rational& L);
CheckReport simplex_check(const SimplexReport& report);

// sum over a+b+c = n of n!/(a! b! c!) C(L,a) C(L,b).
Integer trinomial_sum(unsigned long n, unsigned long L);

inline constexpr std::size_t kLatticePointGuard = 10'000'000;

// Distinct differences of integer points in {x >= 0, sum x <= L}, n <= 3.
Integer lattice_diff_count(unsigned long n, unsigned long L);
CheckReport lattice_count_check(unsigned long n, unsigned long L);

// trinomial_sum(n, L) / (L^n C(2n,n) / n!).
double normalized_lattice_ratio(unsigned long n, unsigned long L);

struct TightnessRow {
  unsigned long n = 0;
  double t = 0.0;
};

struct TightnessSweep {
  std::vector<TightnessRow> rows;
  double min = 0.0, max = 0.0;
  double limit = 0.0;        // 1/sqrt(pi)
  double last_distance = 0.0;  // |t(nmax) - 1/sqrt(pi)|
};

// t(n) = C(2n,n) sqrt(n) / 4^n for n = 1..nmax.
TightnessSweep tightness_sweep(unsigned long nmax);
CheckReport tightness_check(const TightnessSweep& sweep, double lo, double hi, double limit_tolerance);

// sum_m C(n,m)^2 = C(2n,n) for all n <= nmax.
CheckReport vandermonde_check(unsigned long nmax);

}  // namespace convexlab
