#include "convexlab/sigma.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "convexlab/errors.hpp"

namespace convexlab {

namespace {

std::int64_t as_int(unsigned long v) { return static_cast<std::int64_t>(v); }

// Sum of omega^k (n!)^2/((n-k)!(n+k)!) enclosed in `out`. Partial sums are
// lower bounds; the upper side adds a geometric tail bound once it is below
// 2^-(bits+2) of the sum. Returns the number of explicit terms.
unsigned long sigma_enclosure(unsigned long n, const Interval& omega, Interval& out, mpfr_prec_t bits) {
  BigFloat lo_term(1.0, bits), hi_term(1.0, bits), rho(bits), one_minus(bits), tail(bits), threshold(bits);
  mpfr_set_zero(out.lo.get(), 1);
  mpfr_set_zero(out.hi.get(), 1);
  const double omega_d = omega.hi.to_double(Round::up);
  for (unsigned long k = 1; k <= n; ++k) {
    mpfr_mul(lo_term.get(), lo_term.get(), omega.lo.get(), MPFR_RNDD);
    mpfr_mul_ui(lo_term.get(), lo_term.get(), n - k + 1, MPFR_RNDD);
    mpfr_div_ui(lo_term.get(), lo_term.get(), n + k, MPFR_RNDD);
    mpfr_add(out.lo.get(), out.lo.get(), lo_term.get(), MPFR_RNDD);
    mpfr_mul(hi_term.get(), hi_term.get(), omega.hi.get(), MPFR_RNDU);
    mpfr_mul_ui(hi_term.get(), hi_term.get(), n - k + 1, MPFR_RNDU);
    mpfr_div_ui(hi_term.get(), hi_term.get(), n + k, MPFR_RNDU);
    mpfr_add(out.hi.get(), out.hi.get(), hi_term.get(), MPFR_RNDU);
    if (k == n) break;
    // Ratios of consecutive terms decrease in k, so once rho < 1 the rest is
    // bounded by a geometric series.
    if (omega_d * static_cast<double>(n - k) / static_cast<double>(n + k + 1) > 0.99) continue;
    mpfr_mul_ui(rho.get(), omega.hi.get(), n - k, MPFR_RNDU);
    mpfr_div_ui(rho.get(), rho.get(), n + k + 1, MPFR_RNDU);
    mpfr_ui_sub(one_minus.get(), 1, rho.get(), MPFR_RNDD);
    mpfr_mul(tail.get(), hi_term.get(), rho.get(), MPFR_RNDU);
    mpfr_div(tail.get(), tail.get(), one_minus.get(), MPFR_RNDU);
    mpfr_mul_2si(threshold.get(), out.lo.get(), -static_cast<long>(bits) - 2, MPFR_RNDD);
    if (mpfr_cmp(tail.get(), threshold.get()) <= 0) {
      mpfr_add(out.hi.get(), out.hi.get(), tail.get(), MPFR_RNDU);
      return k;
    }
  }
  return n;
}

Interval sum_powers(const Interval& omega, unsigned long count, mpfr_prec_t bits) {
  Interval out{BigFloat(0.0, bits), BigFloat(0.0, bits)};
  BigFloat plo(1.0, bits), phi(1.0, bits);
  for (unsigned long k = 1; k <= count; ++k) {
    mpfr_mul(plo.get(), plo.get(), omega.lo.get(), MPFR_RNDD);
    mpfr_mul(phi.get(), phi.get(), omega.hi.get(), MPFR_RNDU);
    mpfr_add(out.lo.get(), out.lo.get(), plo.get(), MPFR_RNDD);
    mpfr_add(out.hi.get(), out.hi.get(), phi.get(), MPFR_RNDU);
  }
  return out;
}

// (1/2) sum_{k=1}^{count} omega^k exp(-2k^2/n); exp(-2k^2/n) is built as a
// product of q^(2j-1), q = exp(-2/n), so only two exponentials are needed.
Interval middle_sum(const Interval& omega, unsigned long n, unsigned long count, mpfr_prec_t bits) {
  BigFloat q_lo(bits), q_hi(bits), x(bits);
  mpfr_set_ui(x.get(), 2, MPFR_RNDN);
  mpfr_div_ui(x.get(), x.get(), n, MPFR_RNDU);
  mpfr_neg(x.get(), x.get(), MPFR_RNDN);
  mpfr_exp(q_lo.get(), x.get(), MPFR_RNDD);
  mpfr_set_ui(x.get(), 2, MPFR_RNDN);
  mpfr_div_ui(x.get(), x.get(), n, MPFR_RNDD);
  mpfr_neg(x.get(), x.get(), MPFR_RNDN);
  mpfr_exp(q_hi.get(), x.get(), MPFR_RNDU);

  struct Side {
    BigFloat power, decay, step, q2, sum;
  };
  auto run = [&](const BigFloat& w, const BigFloat& q, mpfr_rnd_t rnd) {
    Side s{BigFloat(1.0, bits), BigFloat(1.0, bits), BigFloat(bits), BigFloat(bits), BigFloat(0.0, bits)};
    mpfr_set(s.step.get(), q.get(), rnd);
    mpfr_sqr(s.q2.get(), q.get(), rnd);
    BigFloat term(bits);
    for (unsigned long k = 1; k <= count; ++k) {
      mpfr_mul(s.power.get(), s.power.get(), w.get(), rnd);
      mpfr_mul(s.decay.get(), s.decay.get(), s.step.get(), rnd);
      mpfr_mul(s.step.get(), s.step.get(), s.q2.get(), rnd);
      mpfr_mul(term.get(), s.power.get(), s.decay.get(), rnd);
      mpfr_add(s.sum.get(), s.sum.get(), term.get(), rnd);
    }
    mpfr_div_2ui(s.sum.get(), s.sum.get(), 1, rnd);
    return s.sum;
  };
  return Interval{run(omega.lo, q_lo, MPFR_RNDD), run(omega.hi, q_hi, MPFR_RNDU)};
}

double ratio(const BigFloat& a, const BigFloat& b) { return div(a, b, Round::nearest).to_double(); }

}  // namespace

SigmaParams::SigmaParams(unsigned long n_, Rational alpha_) : n(n_), alpha(std::move(alpha_)) {
  require(n >= 1, "sigma: n must be at least 1");
  require(sgn(alpha) > 0, "sigma: alpha must be positive");
}

unsigned long SigmaParams::delta() const { return integer_sqrt(n) + 1; }

Interval SigmaParams::omega(mpfr_prec_t bits) const {
  const Rational inv = 1 / alpha;
  return Interval{root(BigFloat(inv, bits, Round::down), n, Round::down),
                  root(BigFloat(inv, bits, Round::up), n, Round::up)};
}

std::optional<Rational> SigmaParams::exact_omega() const { return exact_root(1 / alpha, n); }

double SigmaValue::value() const { return enclosure.mid().to_double(); }

double SigmaValue::certified_digits() const {
  const double r = enclosure.relative_radius();
  if (r == 0.0) return std::numeric_limits<double>::infinity();
  return -std::log10(r);
}

Rational sigma_exact(unsigned long n, const Rational& omega) {
  Rational term = 1, sum = 0;
  for (unsigned long k = 1; k <= n; ++k) {
    term *= omega * make_rational(n - k + 1, n + k);
    sum += term;
  }
  return sum;
}

std::vector<Rational> sigma_coefficients_recurrence(unsigned long n) {
  std::vector<Rational> out{Rational(1)};
  for (unsigned long k = 1; k <= n; ++k) out.push_back(out.back() * make_rational(n - k + 1, n + k));
  return out;
}

std::vector<Rational> sigma_coefficients_direct(unsigned long n) {
  std::vector<Rational> out;
  const Integer nf = factorial(n);
  for (unsigned long k = 0; k <= n; ++k) {
    Rational c(nf * nf, factorial(n - k) * factorial(n + k));
    c.canonicalize();
    out.push_back(c);
  }
  return out;
}

SigmaValue sigma(const SigmaParams& params, mpfr_prec_t bits, double required_digits, bool allow_exact) {
  SigmaValue out{Interval{BigFloat(bits), BigFloat(bits)}, std::nullopt, params.n, bits};
  if (allow_exact && params.n <= kSigmaExactMaxN) {
    if (auto w = params.exact_omega()) {
      Rational value = sigma_exact(params.n, *w);
      out.enclosure = Interval::exact(value, bits);
      out.exact = std::move(value);
      return out;
    }
  }
  const Interval w = params.omega(bits);
  out.terms = sigma_enclosure(params.n, w, out.enclosure, bits);
  if (required_digits > 0 && out.certified_digits() < required_digits) {
    throw PrecisionError("sigma: " + std::to_string(bits) + " bits certify only " +
                         std::to_string(out.certified_digits()) + " digits");
  }
  return out;
}

Rational beta_function(unsigned long k, unsigned long n_plus_one) {
  require(k >= 1 && n_plus_one >= 1, "beta function arguments must be positive integers");
  Rational b(factorial(k - 1) * factorial(n_plus_one - 1), factorial(k + n_plus_one - 1));
  b.canonicalize();
  return b;
}

CheckReport beta_identity_check(unsigned long n, unsigned long k) {
  if (k < 1 || k > n) throw InvalidInput("beta identity needs 1 <= k <= n");
  const Integer nf = factorial(n);
  Rational rhs(nf * nf, factorial(n - k) * factorial(n + k));
  rhs.canonicalize();
  const Rational lhs = Rational(k) * Rational(binomial(n, k)) * beta_function(k, n + 1);
  CheckReport r;
  r.name = "beta_identity";
  r.parameters["n"] = std::to_string(n);
  r.parameters["k"] = std::to_string(k);
  r.lhs = lhs;
  r.rhs = rhs;
  r.metrics["holds.equal"] = lhs == rhs;
  r.finalize();
  return r;
}

CheckReport beta_identity_sweep(unsigned long nmax) {
  require(nmax >= 1, "beta identity sweep needs nmax >= 1");
  std::size_t checked = 0, mismatches = 0;
  for (unsigned long n = 1; n <= nmax; ++n) {
    for (unsigned long k = 1; k <= n; ++k) {
      ++checked;
      if (!beta_identity_check(n, k).pass) ++mismatches;
    }
  }
  CheckReport r;
  r.name = "beta_identity_sweep";
  r.parameters["nmax"] = std::to_string(nmax);
  r.lhs = Rational(static_cast<long>(mismatches));
  r.rhs = Rational(0);
  r.metrics["pairsChecked"] = static_cast<std::int64_t>(checked);
  r.finalize();
  return r;
}

SigmaChain sigma_chain(const SigmaParams& params, mpfr_prec_t bits, bool allow_exact) {
  const Interval w = params.omega(bits);
  const unsigned long delta = params.delta();
  SigmaChain c{sigma(params, bits, 0.0, allow_exact), middle_sum(w, params.n, delta, bits),
               sum_powers(w, delta, bits)};
  c.c_best = ratio(c.middle.mid(), c.last.mid());
  c.c_emp = ratio(c.sigma.enclosure.mid(), c.last.mid());
  return c;
}

CheckReport sigma_lower_bound(const SigmaParams& params, mpfr_prec_t bits) {
  const SigmaChain c = sigma_chain(params, bits);
  const Interval w = params.omega(bits);
  const unsigned long n = params.n, delta = params.delta();
  CheckReport r;
  r.name = "sigma_lower_bound";
  r.parameters["n"] = std::to_string(n);
  r.parameters["alpha"] = to_string(params.alpha);
  r.parameters["precisionBits"] = std::to_string(bits);
  // sigma >= middle, with middle rounded up and sigma rounded down.
  r.lhs = c.middle.hi.to_double(Round::up);
  r.rhs = c.sigma.enclosure.lo.to_double(Round::down);
  if (c.sigma.exact) r.metrics["sigmaExact"] = *c.sigma.exact;
  r.metrics["sigma"] = c.sigma.value();
  r.metrics["middle"] = c.middle.mid().to_double();
  r.metrics["sumOmegaPowers"] = c.last.mid().to_double();
  r.metrics["omega"] = w.mid().to_double();
  r.metrics["Delta"] = as_int(delta);
  r.metrics["cBest"] = c.c_best;
  r.metrics["cEmp"] = c.c_emp;
  r.metrics["holds.Delta^2>n>=(Delta-1)^2"] = delta * delta > n && n >= (delta - 1) * (delta - 1);
  if (w.lo.sign() > 0 && mpfr_cmp_ui(w.lo.get(), 1) >= 0) {
    // omega >= 1: sum omega^k >= Delta > sqrt n.
    r.metrics["holds.sumOmegaPowers>=Delta>sqrt(n)"] = mpfr_cmp_ui(c.last.lo.get(), delta) >= 0 && delta * delta > n;
  }
  if (n <= 2) {
    r.notes.push_back("n <= 2: ln(1-x) >= -2x does not cover 2j/(n+j); the inequality is checked directly");
  }
  r.finalize();
  return r;
}

CheckReport log_inequality_check(std::size_t samples) {
  require(samples >= 2, "log inequality check needs at least two samples");
  constexpr mpfr_prec_t bits = 128;
  BigFloat x_lo(bits), x_hi(bits), one_minus(bits), ln_lo(bits), gap(bits), worst(bits);
  mpfr_set_inf(worst.get(), -1);
  std::size_t failures = 0;
  Rational worst_x = 0;
  for (std::size_t i = 0; i < samples; ++i) {
    const Rational x(static_cast<unsigned long>(i), 2 * static_cast<unsigned long>(samples - 1));
    mpfr_set_q(x_lo.get(), Rational(x).get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(x_hi.get(), Rational(x).get_mpq_t(), MPFR_RNDU);
    mpfr_ui_sub(one_minus.get(), 1, x_hi.get(), MPFR_RNDD);
    mpfr_log(ln_lo.get(), one_minus.get(), MPFR_RNDD);
    // gap = -2x - ln(1-x), rounded up; the inequality needs gap <= 0.
    mpfr_mul_si(gap.get(), x_lo.get(), -2, MPFR_RNDU);
    mpfr_sub(gap.get(), gap.get(), ln_lo.get(), MPFR_RNDU);
    if (gap.sign() > 0) ++failures;
    if (mpfr_cmp(gap.get(), worst.get()) > 0) {
      mpfr_set(worst.get(), gap.get(), MPFR_RNDU);
      worst_x = x;
    }
  }
  CheckReport r;
  r.name = "log_inequality";
  r.parameters["samples"] = std::to_string(samples);
  r.parameters["interval"] = "[0, 1/2]";
  r.lhs = worst.to_double(Round::up);
  r.rhs = 0.0;
  r.metrics["worstX"] = worst_x;
  r.metrics["failures"] = static_cast<std::int64_t>(failures);
  r.finalize();
  return r;
}

SigmaSweep sigma_sweep(unsigned long n_lo, unsigned long n_hi, const std::vector<Rational>& alphas,
                       mpfr_prec_t bits) {
  require(n_lo >= 1 && n_lo <= n_hi, "sigma sweep: need 1 <= n_lo <= n_hi");
  require(!alphas.empty(), "sigma sweep: no alpha values");
  SigmaSweep out;
  out.min_c_emp = std::numeric_limits<double>::infinity();
  for (unsigned long n = n_lo; n <= n_hi; ++n) {
    for (const auto& alpha : alphas) {
      const SigmaParams params(n, alpha);
      const SigmaChain c = sigma_chain(params, bits, false);
      SigmaSweepRow row;
      row.n = n;
      row.alpha = alpha;
      row.sigma = c.sigma.value();
      row.lower_bound = c.middle.mid().to_double();
      row.ratio = ratio(c.sigma.enclosure.mid(), c.middle.mid());
      row.c_emp = c.c_emp;
      row.chain_holds = c.sigma.enclosure.lo >= c.middle.hi;
      const Interval w = params.omega(bits);
      if (mpfr_cmp_ui(w.lo.get(), 1) >= 0) {
        const unsigned long delta = params.delta();
        row.specialization_holds = mpfr_cmp_ui(c.last.lo.get(), delta) >= 0 && delta * delta > n;
      }
      out.all_hold = out.all_hold && row.chain_holds && row.specialization_holds;
      out.min_c_emp = std::min(out.min_c_emp, row.c_emp);
      if (alpha == 1) {
        const double scaled = row.sigma / std::sqrt(static_cast<double>(n));
        out.sqrt_bracket_lo = std::min(out.sqrt_bracket_lo.value_or(scaled), scaled);
        out.sqrt_bracket_hi = std::max(out.sqrt_bracket_hi.value_or(scaled), scaled);
      }
      out.rows.push_back(std::move(row));
    }
  }
  return out;
}

CheckReport sigma_sweep_report(const SigmaSweep& sweep, unsigned long n_lo, unsigned long n_hi,
                               const std::vector<Rational>& alphas) {
  std::size_t failing = 0;
  for (const auto& row : sweep.rows) failing += !(row.chain_holds && row.specialization_holds);
  std::string alpha_list;
  for (const auto& a : alphas) alpha_list += (alpha_list.empty() ? "" : ",") + to_string(a);
  CheckReport r;
  r.name = "sigma_chain_sweep";
  r.parameters["n"] = std::to_string(n_lo) + ".." + std::to_string(n_hi);
  r.parameters["alpha"] = alpha_list;
  r.lhs = Rational(static_cast<long>(failing));
  r.rhs = Rational(0);
  r.metrics["rows"] = static_cast<std::int64_t>(sweep.rows.size());
  r.metrics["minCEmp"] = sweep.min_c_emp;
  if (sweep.sqrt_bracket_lo) {
    r.metrics["sigma(n,1)/sqrt(n) min"] = *sweep.sqrt_bracket_lo;
    r.metrics["sigma(n,1)/sqrt(n) max"] = *sweep.sqrt_bracket_hi;
  }
  r.finalize();
  return r;
}

}  // namespace convexlab
