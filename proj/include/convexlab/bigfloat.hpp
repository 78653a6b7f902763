#pragma once

#include <mpfr.h>

#include <string>

#include "convexlab/rational.hpp"

namespace convexlab {

enum class Round { down, up, nearest };

mpfr_rnd_t to_mpfr(Round r);

// Owning MPFR value. Every arithmetic helper takes an explicit rounding
// direction so that lower and upper bounds can be carried side by side.
class BigFloat {
 public:
  explicit BigFloat(mpfr_prec_t bits = 128);
  BigFloat(double value, mpfr_prec_t bits);
  BigFloat(const Rational& value, mpfr_prec_t bits, Round r);
  BigFloat(const BigFloat& other);
  BigFloat(BigFloat&& other) noexcept;
  BigFloat& operator=(const BigFloat& other);
  BigFloat& operator=(BigFloat&& other) noexcept;
  ~BigFloat();

  mpfr_ptr get() { return value_; }
  mpfr_srcptr get() const { return value_; }
  mpfr_prec_t precision() const { return mpfr_get_prec(value_); }

  double to_double(Round r = Round::nearest) const;
  // Exact conversion; every finite binary float is a dyadic rational.
  Rational to_rational() const;
  // Scientific notation with the given number of significant digits.
  std::string to_string(int digits) const;

  int sign() const { return mpfr_sgn(value_); }

  friend int compare(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.value_, b.value_); }
  friend bool operator<(const BigFloat& a, const BigFloat& b) { return compare(a, b) < 0; }
  friend bool operator<=(const BigFloat& a, const BigFloat& b) { return compare(a, b) <= 0; }
  friend bool operator>(const BigFloat& a, const BigFloat& b) { return compare(a, b) > 0; }
  friend bool operator>=(const BigFloat& a, const BigFloat& b) { return compare(a, b) >= 0; }

 private:
  mpfr_t value_;
  bool owns_ = false;
};

BigFloat add(const BigFloat& a, const BigFloat& b, Round r);
BigFloat sub(const BigFloat& a, const BigFloat& b, Round r);
BigFloat mul(const BigFloat& a, const BigFloat& b, Round r);
BigFloat div(const BigFloat& a, const BigFloat& b, Round r);
BigFloat mul_ui(const BigFloat& a, unsigned long b, Round r);
BigFloat div_ui(const BigFloat& a, unsigned long b, Round r);
BigFloat root(const BigFloat& a, unsigned long k, Round r);
BigFloat pow_ui(const BigFloat& a, unsigned long k, Round r);
BigFloat exp(const BigFloat& a, Round r);
BigFloat log(const BigFloat& a, Round r);
BigFloat sqrt(const BigFloat& a, Round r);
BigFloat neg(const BigFloat& a);

// Closed enclosure [lo, hi] of a real number.
struct Interval {
  BigFloat lo;
  BigFloat hi;

  static Interval exact(const Rational& value, mpfr_prec_t bits);
  BigFloat mid() const;
  // (hi - lo) / (2 |mid|); zero for a point interval.
  double relative_radius() const;
  bool contains(const BigFloat& x) const { return lo <= x && x <= hi; }
};

// k-th root of a positive rational, enclosed.
Interval root_enclosure(const Rational& value, unsigned long k, mpfr_prec_t bits);

}  // namespace convexlab
