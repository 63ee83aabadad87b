#include "irank/interval.hpp"

#include <algorithm>
#include <ostream>
#include <utility>

#include "irank/errors.hpp"

namespace irank {

Interval::Interval(Rational lo, Rational hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
  if (lo_ > hi_) {
    throw PreconditionError("interval endpoints out of order: [" + to_string(lo_) + ", " +
                            to_string(hi_) + "]");
  }
}

Interval operator+(const Interval& a, const Interval& b) {
  return Interval(a.lo() + b.lo(), a.hi() + b.hi());
}

Interval operator*(const Interval& a, const Interval& b) {
  Rational p[4] = {a.lo() * b.lo(), a.lo() * b.hi(), a.hi() * b.lo(), a.hi() * b.hi()};
  auto [lo, hi] = std::minmax_element(std::begin(p), std::end(p));
  return Interval(*lo, *hi);
}

Interval operator*(const Rational& e, const Interval& a) {
  Rational x = e * a.lo();
  Rational y = e * a.hi();
  return x <= y ? Interval(std::move(x), std::move(y)) : Interval(std::move(y), std::move(x));
}

Interval operator-(const Interval& a) { return Interval(-a.hi(), -a.lo()); }

bool intersects(const Interval& a, const Interval& b) {
  return a.lo() <= b.hi() && b.lo() <= a.hi();
}

SignFlags classify(const Interval& a) {
  SignFlags f;
  const int lo = sign(a.lo());
  const int hi = sign(a.hi());
  if (lo >= 0) f.set(SignFlag::NonNeg);
  if (hi <= 0) f.set(SignFlag::NonPos);
  if (hi < 0) f.set(SignFlag::StrictNeg);
  if (lo > 0) f.set(SignFlag::StrictPos);
  if (lo < 0 && hi > 0) f.set(SignFlag::StraddlesZero);
  if (lo == 0 && hi == 0) f.set(SignFlag::Zero);
  if (a.is_constant()) f.set(SignFlag::Constant);
  return f;
}

std::string to_string(const Interval& a) {
  return "[" + to_string(a.lo()) + ", " + to_string(a.hi()) + "]";
}

std::ostream& operator<<(std::ostream& os, const Interval& a) { return os << to_string(a); }

}  // namespace irank
