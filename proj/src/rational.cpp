#include "convexlab/rational.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "convexlab/errors.hpp"

namespace convexlab {

namespace {

Integer parse_integer(std::string_view text, std::string_view whole) {
  if (text.empty()) throw InvalidInput("empty number in '" + std::string(whole) + "'");
  std::size_t start = (text[0] == '-' || text[0] == '+') ? 1 : 0;
  if (start == text.size()) throw InvalidInput("malformed number '" + std::string(whole) + "'");
  for (std::size_t i = start; i < text.size(); ++i) {
    if (text[i] < '0' || text[i] > '9') throw InvalidInput("malformed number '" + std::string(whole) + "'");
  }
  std::string digits(text[0] == '+' ? text.substr(1) : text);
  return Integer(digits, 10);
}

Integer pow10(unsigned long e) {
  Integer result;
  mpz_ui_pow_ui(result.get_mpz_t(), 10, e);
  return result;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    Integer p = parse_integer(text.substr(0, slash), text);
    Integer q = parse_integer(text.substr(slash + 1), text);
    if (q == 0) throw InvalidInput("zero denominator in '" + std::string(text) + "'");
    Rational r(p, q);
    r.canonicalize();
    return r;
  }
  // Decimal literal: [sign] digits [. digits] [e|E [sign] digits]
  std::string_view mantissa = text;
  long exponent = 0;
  if (auto e = text.find_first_of("eE"); e != std::string_view::npos) {
    mantissa = text.substr(0, e);
    exponent = parse_integer(text.substr(e + 1), text).get_si();
  }
  std::string digits;
  bool negative = false;
  std::size_t i = 0;
  if (!mantissa.empty() && (mantissa[0] == '-' || mantissa[0] == '+')) {
    negative = mantissa[0] == '-';
    i = 1;
  }
  long fraction_digits = 0;
  bool seen_point = false;
  for (; i < mantissa.size(); ++i) {
    char c = mantissa[i];
    if (c == '.' && !seen_point) {
      seen_point = true;
    } else if (c >= '0' && c <= '9') {
      digits.push_back(c);
      if (seen_point) ++fraction_digits;
    } else {
      throw InvalidInput("malformed number '" + std::string(text) + "'");
    }
  }
  if (digits.empty()) throw InvalidInput("malformed number '" + std::string(text) + "'");
  Rational r(Integer(digits, 10));
  long scale = exponent - fraction_digits;
  if (scale > 0) r *= Rational(pow10(static_cast<unsigned long>(scale)));
  if (scale < 0) r /= Rational(pow10(static_cast<unsigned long>(-scale)));
  r.canonicalize();
  return negative ? Rational(-r) : r;
}

std::string to_string(const Rational& value) { return value.get_str(10); }

Rational exact_from_double(double value) {
  if (!std::isfinite(value)) throw InvalidInput("non-finite coordinate");
  Rational r;
  mpq_set_d(r.get_mpq_t(), value);
  return r;
}

Integer floor(const Rational& value) {
  Integer result;
  mpz_fdiv_q(result.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
  return result;
}

Integer ceil(const Rational& value) {
  Integer result;
  mpz_cdiv_q(result.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
  return result;
}

Rational make_rational(const Integer& p, const Integer& q) {
  require(q != 0, "zero denominator");
  Rational r(p, q);
  r.canonicalize();
  return r;
}

std::optional<Rational> exact_root(const Rational& value, unsigned long k) {
  if (sgn(value) < 0 || k == 0) return std::nullopt;
  Integer p, q;
  if (mpz_root(p.get_mpz_t(), value.get_num_mpz_t(), k) == 0) return std::nullopt;
  if (mpz_root(q.get_mpz_t(), value.get_den_mpz_t(), k) == 0) return std::nullopt;
  return Rational(p, q);
}

Integer factorial(unsigned long n) {
  Integer result;
  mpz_fac_ui(result.get_mpz_t(), n);
  return result;
}

unsigned long integer_sqrt(unsigned long n) {
  Integer r;
  mpz_sqrt(r.get_mpz_t(), Integer(n).get_mpz_t());
  return r.get_ui();
}

Integer binomial(unsigned long n, unsigned long k) {
  Integer result;
  mpz_bin_uiui(result.get_mpz_t(), n, k);
  return result;
}

std::vector<Integer> primitive_integer(const QVector& v) {
  Integer lcm = 1;
  for (const auto& x : v) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), x.get_den_mpz_t());
  std::vector<Integer> out;
  out.reserve(v.size());
  Integer content = 0;
  for (const auto& x : v) {
    Integer scaled = x.get_num() * (lcm / x.get_den());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), scaled.get_mpz_t());
    out.push_back(std::move(scaled));
  }
  if (content > 1) {
    for (auto& x : out) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), content.get_mpz_t());
  }
  return out;
}

Rational primitive_factor(const QVector& v) {
  std::vector<Integer> p = primitive_integer(v);
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (sgn(v[i]) != 0) return Rational(p[i]) / v[i];
  }
  return 1;
}

bool lex_less(const QVector& a, const QVector& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                      [](const Rational& x, const Rational& y) { return cmp(x, y) < 0; });
}

QVector to_rational(const DVector& v) {
  QVector out;
  out.reserve(v.size());
  for (double x : v) out.push_back(exact_from_double(x));
  return out;
}

DVector to_double(const QVector& v) {
  DVector out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(x.get_d());
  return out;
}

}  // namespace convexlab
