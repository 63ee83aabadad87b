#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include "irank/rational.hpp"

namespace irank {

/// Closed interval [lo, hi] with exact rational endpoints, lo <= hi.
class Interval {
 public:
  Interval() = default;
  /// Throws PreconditionError when lo > hi.
  Interval(Rational lo, Rational hi);

  static Interval point(const Rational& value) { return Interval(value, value); }

  const Rational& lo() const { return lo_; }
  const Rational& hi() const { return hi_; }

  bool contains(const Rational& x) const { return lo_ <= x && x <= hi_; }
  bool contains_zero() const { return sign(lo_) <= 0 && sign(hi_) >= 0; }
  bool is_constant() const { return lo_ == hi_; }
  Rational midpoint() const { return (lo_ + hi_) / 2; }
  Rational width() const { return hi_ - lo_; }

  friend bool operator==(const Interval&, const Interval&) = default;

 private:
  Rational lo_{0};
  Rational hi_{0};
};

/// [e,f] + [g,h] = [e+g, f+h]
Interval operator+(const Interval& a, const Interval& b);
/// [e,f] * [g,h] = [min{eg,eh,fg,fh}, max{eg,eh,fg,fh}]
Interval operator*(const Interval& a, const Interval& b);
/// e * [g,h] = [min{eg,eh}, max{eg,eh}]
Interval operator*(const Rational& e, const Interval& a);
Interval operator-(const Interval& a);

inline Interval interval_add(const Interval& a, const Interval& b) { return a + b; }
inline Interval interval_mul(const Interval& a, const Interval& b) { return a * b; }
inline Interval scalar_mul(const Rational& e, const Interval& a) { return e * a; }

/// Intersection test; the intervals share at least one point.
bool intersects(const Interval& a, const Interval& b);

/// Sign categories of an interval. Several flags hold at once for most
/// intervals, e.g. [0,0] is NonNeg, NonPos, Zero and Constant.
enum class SignFlag : std::uint8_t {
  NonNeg = 1u << 0,
  NonPos = 1u << 1,
  StrictNeg = 1u << 2,
  StrictPos = 1u << 3,
  StraddlesZero = 1u << 4,
  Zero = 1u << 5,
  Constant = 1u << 6,
};

class SignFlags {
 public:
  constexpr SignFlags() = default;
  constexpr explicit SignFlags(std::uint8_t bits) : bits_(bits) {}

  constexpr bool has(SignFlag f) const { return (bits_ & static_cast<std::uint8_t>(f)) != 0; }
  constexpr SignFlags& set(SignFlag f) {
    bits_ |= static_cast<std::uint8_t>(f);
    return *this;
  }
  constexpr std::uint8_t bits() const { return bits_; }

  friend constexpr bool operator==(SignFlags, SignFlags) = default;

 private:
  std::uint8_t bits_ = 0;
};

SignFlags classify(const Interval& a);

/// Sign-definite: contained in the nonnegative or in the nonpositive reals.
inline bool is_sign_definite(const Interval& a) { return sign(a.lo()) >= 0 || sign(a.hi()) <= 0; }

std::string to_string(const Interval& a);
std::ostream& operator<<(std::ostream& os, const Interval& a);

}  // namespace irank
