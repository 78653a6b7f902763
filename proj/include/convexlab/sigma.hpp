#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "convexlab/bigfloat.hpp"
#include "convexlab/rational.hpp"
#include "convexlab/report.hpp"

namespace convexlab {

// alpha = mu(B)/mu(A), omega = alpha^(-1/n), Delta = floor(sqrt n) + 1.
struct SigmaParams {
  unsigned long n = 1;
  Rational alpha = 1;

  SigmaParams() = default;
  SigmaParams(unsigned long n, Rational alpha);

  unsigned long delta() const;
  Interval omega(mpfr_prec_t bits) const;
  // omega as a rational when alpha is a perfect n-th power.
  std::optional<Rational> exact_omega() const;
};

struct SigmaValue {
  Interval enclosure;
  std::optional<Rational> exact;
  unsigned long terms = 0;  // terms summed before the tail bound took over
  mpfr_prec_t bits = 0;

  double value() const;
  // Decimal digits certified by the enclosure (inf for a point).
  double certified_digits() const;
};

inline constexpr mpfr_prec_t kSigmaBits = 128;
// Exact rational summation is used up to this n when omega is rational.
inline constexpr unsigned long kSigmaExactMaxN = 400;

// Sum_{k=1}^n omega^k (n!)^2 / ((n-k)! (n+k)!). Throws PrecisionError when the
// enclosure cannot certify `required_digits` significant digits.
SigmaValue sigma(const SigmaParams& params, mpfr_prec_t bits = kSigmaBits, double required_digits = 0.0,
                 bool allow_exact = true);

// Exact rational value, only for rational omega.
Rational sigma_exact(unsigned long n, const Rational& omega);
// Terms (n!)^2/((n-k)!(n+k)!) for k = 0..n, by the recurrence and directly.
std::vector<Rational> sigma_coefficients_recurrence(unsigned long n);
std::vector<Rational> sigma_coefficients_direct(unsigned long n);

// B(k, n+1) = (k-1)! n! / (n+k)!.
Rational beta_function(unsigned long k, unsigned long n_plus_one);
CheckReport beta_identity_check(unsigned long n, unsigned long k);
// Every 1 <= k <= n <= nmax.
CheckReport beta_identity_sweep(unsigned long nmax);

// Quantities of the proof chain sigma >= middle >> last.
struct SigmaChain {
  SigmaValue sigma;
  Interval middle;  // (1/2) sum_{k<=Delta} omega^k exp(-2k^2/n)
  Interval last;    // sum_{k<=Delta} omega^k
  double c_best = 0.0;  // middle / last
  double c_emp = 0.0;   // sigma / last
};

SigmaChain sigma_chain(const SigmaParams& params, mpfr_prec_t bits = kSigmaBits, bool allow_exact = true);
CheckReport sigma_lower_bound(const SigmaParams& params, mpfr_prec_t bits = kSigmaBits);

// ln(1-x) >= -2x on an even grid of [0, 1/2] including both endpoints.
CheckReport log_inequality_check(std::size_t samples);

struct SigmaSweepRow {
  unsigned long n = 0;
  Rational alpha;
  double sigma = 0.0;
  double lower_bound = 0.0;  // the middle quantity
  double ratio = 0.0;        // sigma / lower_bound
  double c_emp = 0.0;        // sigma / sum omega^k
  bool chain_holds = false;
  bool specialization_holds = true;  // only meaningful for omega >= 1
};

struct SigmaSweep {
  std::vector<SigmaSweepRow> rows;
  bool all_hold = true;
  double min_c_emp = 0.0;
  // bracket of sigma(n, 1) / sqrt(n) over the rows with alpha = 1
  std::optional<double> sqrt_bracket_lo, sqrt_bracket_hi;
};

// Rows for n = n_lo..n_hi and every alpha, in that order. Uses 64-bit
// enclosures, which is plenty for a chain check.
SigmaSweep sigma_sweep(unsigned long n_lo, unsigned long n_hi, const std::vector<Rational>& alphas,
                       mpfr_prec_t bits = 64);
CheckReport sigma_sweep_report(const SigmaSweep& sweep, unsigned long n_lo, unsigned long n_hi,
                               const std::vector<Rational>& alphas);

}  // namespace convexlab
