#include "convexlab/bigfloat.hpp"

#include <cmath>
#include <limits>
#include <utility>
#include <vector>

namespace convexlab {

mpfr_rnd_t to_mpfr(Round r) {
  switch (r) {
    case Round::down: return MPFR_RNDD;
    case Round::up: return MPFR_RNDU;
    case Round::nearest: return MPFR_RNDN;
  }
  return MPFR_RNDN;
}

BigFloat::BigFloat(mpfr_prec_t bits) : owns_(true) {
  mpfr_init2(value_, bits);
  mpfr_set_zero(value_, 1);
}

BigFloat::BigFloat(double value, mpfr_prec_t bits) : BigFloat(bits) { mpfr_set_d(value_, value, MPFR_RNDN); }

BigFloat::BigFloat(const Rational& value, mpfr_prec_t bits, Round r) : BigFloat(bits) {
  mpfr_set_q(value_, value.get_mpq_t(), to_mpfr(r));
}

BigFloat::BigFloat(const BigFloat& other) : owns_(true) {
  mpfr_init2(value_, mpfr_get_prec(other.value_));
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& other) noexcept : owns_(true) {
  mpfr_init2(value_, mpfr_get_prec(other.value_));
  mpfr_swap(value_, other.value_);
}

BigFloat& BigFloat::operator=(const BigFloat& other) {
  if (this != &other) {
    mpfr_set_prec(value_, mpfr_get_prec(other.value_));
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& other) noexcept {
  if (this != &other) mpfr_swap(value_, other.value_);
  return *this;
}

BigFloat::~BigFloat() {
  if (owns_) mpfr_clear(value_);
}

double BigFloat::to_double(Round r) const { return mpfr_get_d(value_, to_mpfr(r)); }

Rational BigFloat::to_rational() const {
  Rational q;
  mpfr_get_q(q.get_mpq_t(), value_);
  return q;
}

std::string BigFloat::to_string(int digits) const {
  std::vector<char> buffer(static_cast<std::size_t>(digits) + 64);
  mpfr_snprintf(buffer.data(), buffer.size(), "%.*Re", digits - 1, value_);
  return std::string(buffer.data());
}

namespace {

mpfr_prec_t max_prec(const BigFloat& a, const BigFloat& b) { return std::max(a.precision(), b.precision()); }

}  // namespace

BigFloat add(const BigFloat& a, const BigFloat& b, Round r) {
  BigFloat out(max_prec(a, b));
  mpfr_add(out.get(), a.get(), b.get(), to_mpfr(r));
  return out;
}

BigFloat sub(const BigFloat& a, const BigFloat& b, Round r) {
  BigFloat out(max_prec(a, b));
  mpfr_sub(out.get(), a.get(), b.get(), to_mpfr(r));
  return out;
}

BigFloat mul(const BigFloat& a, const BigFloat& b, Round r) {
  BigFloat out(max_prec(a, b));
  mpfr_mul(out.get(), a.get(), b.get(), to_mpfr(r));
  return out;
}

BigFloat div(const BigFloat& a, const BigFloat& b, Round r) {
  BigFloat out(max_prec(a, b));
  mpfr_div(out.get(), a.get(), b.get(), to_mpfr(r));
  return out;
}

BigFloat mul_ui(const BigFloat& a, unsigned long b, Round r) {
  BigFloat out(a.precision());
  mpfr_mul_ui(out.get(), a.get(), b, to_mpfr(r));
  return out;
}

BigFloat div_ui(const BigFloat& a, unsigned long b, Round r) {
  BigFloat out(a.precision());
  mpfr_div_ui(out.get(), a.get(), b, to_mpfr(r));
  return out;
}

BigFloat root(const BigFloat& a, unsigned long k, Round r) {
  BigFloat out(a.precision());
  mpfr_rootn_ui(out.get(), a.get(), k, to_mpfr(r));
  return out;
}

BigFloat pow_ui(const BigFloat& a, unsigned long k, Round r) {
  BigFloat out(a.precision());
  mpfr_pow_ui(out.get(), a.get(), k, to_mpfr(r));
  return out;
}

BigFloat exp(const BigFloat& a, Round r) {
  BigFloat out(a.precision());
  mpfr_exp(out.get(), a.get(), to_mpfr(r));
  return out;
}

BigFloat log(const BigFloat& a, Round r) {
  BigFloat out(a.precision());
  mpfr_log(out.get(), a.get(), to_mpfr(r));
  return out;
}

BigFloat sqrt(const BigFloat& a, Round r) {
  BigFloat out(a.precision());
  mpfr_sqrt(out.get(), a.get(), to_mpfr(r));
  return out;
}

BigFloat neg(const BigFloat& a) {
  BigFloat out(a.precision());
  mpfr_neg(out.get(), a.get(), MPFR_RNDN);
  return out;
}

Interval Interval::exact(const Rational& value, mpfr_prec_t bits) {
  return Interval{BigFloat(value, bits, Round::down), BigFloat(value, bits, Round::up)};
}

BigFloat Interval::mid() const {
  BigFloat sum = add(lo, hi, Round::nearest);
  mpfr_div_2ui(sum.get(), sum.get(), 1, MPFR_RNDN);
  return sum;
}

double Interval::relative_radius() const {
  BigFloat m = mid();
  if (m.sign() == 0) return compare(lo, hi) == 0 ? 0.0 : std::numeric_limits<double>::infinity();
  BigFloat width = sub(hi, lo, Round::up);
  BigFloat r = div(width, m, Round::up);
  return std::abs(r.to_double(Round::up)) / 2.0;
}

Interval root_enclosure(const Rational& value, unsigned long k, mpfr_prec_t bits) {
  BigFloat lo(value, bits, Round::down);
  BigFloat hi(value, bits, Round::up);
  return Interval{root(lo, k, Round::down), root(hi, k, Round::up)};
}

}  // namespace convexlab
