#include "irank/rational.hpp"

#include <cctype>

#include "irank/errors.hpp"

namespace irank {
namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

[[noreturn]] void fail(std::string_view text) {
  throw ParseError("not an exact number: \"" + std::string(text) + "\"");
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);

  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (s.empty()) fail(text);

  Rational value;
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    std::string_view num = s.substr(0, slash);
    std::string_view den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) fail(text);
    mpz_class d(std::string(den), 10);
    if (d == 0) fail(text);
    value = ratio(mpz_class(std::string(num), 10), d);
  } else if (auto dot = s.find('.'); dot != std::string_view::npos) {
    std::string_view whole = s.substr(0, dot);
    std::string_view frac = s.substr(dot + 1);
    if (whole.empty() && frac.empty()) fail(text);
    if ((!whole.empty() && !all_digits(whole)) || (!frac.empty() && !all_digits(frac))) fail(text);
    std::string digits = std::string(whole) + std::string(frac);
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
    value = ratio(mpz_class(digits, 10), scale);
  } else {
    if (!all_digits(s)) fail(text);
    value = Rational(mpz_class(std::string(s), 10));
  }
  value.canonicalize();
  return negative ? Rational(-value) : value;
}

std::string to_string(const Rational& value) {
  // mpq get_str already prints "n" or "n/d" for canonical values.
  return value.get_str(10);
}

}  // namespace irank
