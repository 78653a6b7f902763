#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace convexlab {

using Rational = mpq_class;
using Integer = mpz_class;

using QVector = std::vector<Rational>;
using DVector = std::vector<double>;

// Parses "p/q", "p", or a decimal literal such as "-0.125" or "1e-3" exactly.
Rational parse_rational(std::string_view text);

// Canonical text form: "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& value);

Rational exact_from_double(double value);
// p/q in lowest terms; q must be nonzero.
Rational make_rational(const Integer& p, const Integer& q);

Integer floor(const Rational& value);
Integer ceil(const Rational& value);

// Exact k-th root of a nonnegative rational if it is a perfect k-th power.
std::optional<Rational> exact_root(const Rational& value, unsigned long k);

Integer factorial(unsigned long n);
// floor(sqrt(n)).
unsigned long integer_sqrt(unsigned long n);
Integer binomial(unsigned long n, unsigned long k);

// Multiplies by the lcm of the denominators and divides by the content, so the
// result is the primitive integer vector with the same direction.
std::vector<Integer> primitive_integer(const QVector& v);
// The positive factor f with f * v == primitive_integer(v); v must be nonzero.
Rational primitive_factor(const QVector& v);

// Lexicographic order used to canonicalize vertex lists.
bool lex_less(const QVector& a, const QVector& b);

QVector to_rational(const DVector& v);
DVector to_double(const QVector& v);

}  // namespace convexlab
