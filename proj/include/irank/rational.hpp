#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace irank {

/// Arbitrary-precision rational, always kept in canonical reduced form
/// (positive denominator, coprime numerator/denominator).
using Rational = mpq_class;

/// Parses "17", "-3", "2.75", "-.5", "7/3" or "-7/3" exactly.
/// Throws ParseError on anything else, including a zero denominator.
Rational parse_rational(std::string_view text);

/// Canonical text form: "n" for integers, "n/d" otherwise.
std::string to_string(const Rational& value);

/// num / den in canonical form. den must be nonzero.
inline Rational ratio(const mpz_class& num, const mpz_class& den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline int sign(const Rational& value) { return sgn(value); }

}  // namespace irank
