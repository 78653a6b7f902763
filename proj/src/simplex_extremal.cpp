#include "convexlab/simplex_extremal.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "convexlab/bigfloat.hpp"
#include "convexlab/errors.hpp"
#include "convexlab/geometry.hpp"
#include "convexlab/measure.hpp"
#include "convexlab/set_models.hpp"

namespace convexlab {

namespace {

double tightness_value(unsigned long n, mpfr_prec_t bits) {
  BigFloat t(Rational(binomial(2 * n, n)), bits, Round::nearest);
  BigFloat root_n = sqrt(BigFloat(static_cast<double>(n), bits), Round::nearest);
  t = mul(t, root_n, Round::nearest);
  mpfr_mul_2si(t.get(), t.get(), -2 * static_cast<long>(n), MPFR_RNDN);
  return t.to_double();
}

}  // namespace

SimplexReport simplex_report(unsigned long n, const Rational& L) {
  require(n >= 1, "simplex: n must be at least 1");
  require(sgn(L) > 0, "simplex: L must be positive");
  SimplexReport r;
  r.n = n;
  r.L = L;
  const Integer n_fact = factorial(n);
  Rational l_pow = 1;
  for (unsigned long i = 0; i < n; ++i) l_pow *= L;
  r.tightness = tightness_value(n, 128);
  if (n <= kFacetDimCap) {
    const VPolytope a = make_simplex(n, L);
    const VPolytope sum = minkowski_sum(a, a);
    const VPolytope diff = difference_body(a);
    r.vol_a = exact_volume(a);
    r.vol_sum = exact_volume(sum);
    r.vol_diff = exact_volume(diff);
    r.sum_vertices = sum.vertices().size();
    r.diff_vertices = diff.vertices().size();
    r.kernel_verified = true;
  } else {
    r.vol_a = l_pow / Rational(n_fact);
    r.vol_sum = r.vol_a * Rational(Integer(1) << static_cast<mp_bitcnt_t>(n));
    r.vol_diff = r.vol_a * Rational(binomial(2 * n, n));
  }
  r.sum_ratio = r.vol_sum / r.vol_a;
  r.diff_ratio = r.vol_diff / r.vol_a;
  return r;
}

CheckReport simplex_check(const SimplexReport& s) {
  const Rational expected_sum = Rational(Integer(1) << static_cast<mp_bitcnt_t>(s.n));
  const Rational expected_diff = Rational(binomial(2 * s.n, s.n));
  CheckReport r;
  r.name = "simplex_identities";
  r.parameters["n"] = std::to_string(s.n);
  r.parameters["L"] = to_string(s.L);
  r.lhs = s.diff_ratio;
  r.rhs = expected_diff;
  r.metrics["volA"] = s.vol_a;
  r.metrics["volSum"] = s.vol_sum;
  r.metrics["volDiff"] = s.vol_diff;
  r.metrics["sumRatio"] = s.sum_ratio;
  r.metrics["diffRatio"] = s.diff_ratio;
  r.metrics["tightness"] = s.tightness;
  r.metrics["kernelVerified"] = s.kernel_verified;
  r.metrics["holds.sumRatio=2^n"] = s.sum_ratio == expected_sum;
  r.metrics["holds.diffRatio=C(2n,n)"] = s.diff_ratio == expected_diff;
  if (!s.kernel_verified) r.notes.push_back("closed-form, not kernel-verified");
  r.finalize();
  return r;
}

Integer trinomial_sum(unsigned long n, unsigned long L) {
  require(n >= 1, "trinomial sum: n must be at least 1");
  const Integer n_fact = factorial(n);
  Integer total = 0;
  for (unsigned long a = 0; a <= n && a <= L; ++a) {
    for (unsigned long b = 0; a + b <= n && b <= L; ++b) {
      const unsigned long c = n - a - b;
      Integer multinomial = n_fact / (factorial(a) * factorial(b) * factorial(c));
      total += multinomial * binomial(L, a) * binomial(L, b);
    }
  }
  return total;
}

Integer lattice_diff_count(unsigned long n, unsigned long L) {
  require(n >= 1, "lattice count: n must be at least 1");
  if (n > 3) throw DimensionCapExceeded("lattice_diff_count enumerates only n <= 3");
  if (binomial(L + n, n) > Integer(static_cast<unsigned long>(kLatticePointGuard))) {
    throw InvalidInput("lattice_diff_count: more than 10^7 lattice points");
  }
  std::vector<std::vector<long>> points;
  std::vector<long> x(n, 0);
  // Odometer over {x >= 0, sum x <= L}.
  while (true) {
    points.push_back(x);
    std::size_t k = 0;
    for (; k < n; ++k) {
      ++x[k];
      long total = 0;
      for (long v : x) total += v;
      if (total <= static_cast<long>(L)) break;
      x[k] = 0;
    }
    if (k == n) break;
  }
  // Differences live in [-L, L]^n; mark them in a bitmap.
  const long side = 2 * static_cast<long>(L) + 1;
  std::size_t cells = 1;
  for (unsigned long k = 0; k < n; ++k) cells *= static_cast<std::size_t>(side);
  std::vector<bool> seen(cells, false);
  std::size_t distinct = 0;
  for (const auto& p : points) {
    for (const auto& q : points) {
      std::size_t index = 0;
      for (unsigned long k = 0; k < n; ++k) index = index * side + static_cast<std::size_t>(p[k] - q[k] + L);
      if (!seen[index]) {
        seen[index] = true;
        ++distinct;
      }
    }
  }
  return Integer(static_cast<unsigned long>(distinct));
}

CheckReport lattice_count_check(unsigned long n, unsigned long L) {
  const Integer brute = lattice_diff_count(n, L);
  const Integer formula = trinomial_sum(n, L);
  CheckReport r;
  r.name = "lattice_count_identity";
  r.parameters["n"] = std::to_string(n);
  r.parameters["L"] = std::to_string(L);
  r.lhs = Rational(brute);
  r.rhs = Rational(formula);
  r.metrics["holds.equal"] = brute == formula;
  r.finalize();
  return r;
}

double normalized_lattice_ratio(unsigned long n, unsigned long L) {
  require(L >= 1, "normalized lattice ratio needs L >= 1");
  Integer l_pow = 1;
  for (unsigned long i = 0; i < n; ++i) l_pow *= L;
  const Rational ratio(trinomial_sum(n, L) * factorial(n), l_pow * binomial(2 * n, n));
  return Rational(ratio).get_d();
}

TightnessSweep tightness_sweep(unsigned long nmax) {
  require(nmax >= 1, "tightness sweep needs nmax >= 1");
  TightnessSweep s;
  s.limit = 1.0 / std::sqrt(M_PI);
  for (unsigned long n = 1; n <= nmax; ++n) s.rows.push_back({n, tightness_value(n, 128)});
  auto [lo, hi] = std::minmax_element(s.rows.begin(), s.rows.end(),
                                      [](const TightnessRow& a, const TightnessRow& b) { return a.t < b.t; });
  s.min = lo->t;
  s.max = hi->t;
  s.last_distance = std::abs(s.rows.back().t - s.limit);
  return s;
}

CheckReport tightness_check(const TightnessSweep& s, double lo, double hi, double limit_tolerance) {
  bool monotone = true;
  for (std::size_t i = 1; i < s.rows.size(); ++i) monotone = monotone && s.rows[i].t > s.rows[i - 1].t;
  CheckReport r;
  r.name = "simplex_tightness";
  r.parameters["nmax"] = std::to_string(s.rows.size());
  r.parameters["bracket"] = "[" + std::to_string(lo) + ", " + std::to_string(hi) + "]";
  r.lhs = s.last_distance;
  r.rhs = limit_tolerance;
  r.metrics["min"] = s.min;
  r.metrics["max"] = s.max;
  r.metrics["limit"] = s.limit;
  r.metrics["holds.inBracket"] = s.min >= lo && s.max <= hi;
  r.metrics["holds.increasing"] = monotone;
  r.finalize();
  return r;
}

CheckReport vandermonde_check(unsigned long nmax) {
  std::size_t mismatches = 0;
  for (unsigned long n = 0; n <= nmax; ++n) {
    Integer total = 0;
    for (unsigned long m = 0; m <= n; ++m) {
      const Integer c = binomial(n, m);
      total += c * c;
    }
    if (total != binomial(2 * n, n)) ++mismatches;
  }
  CheckReport r;
  r.name = "vandermonde";
  r.parameters["nmax"] = std::to_string(nmax);
  r.lhs = Rational(static_cast<long>(mismatches));
  r.rhs = Rational(0);
  r.finalize();
  return r;
}

}  // namespace convexlab
