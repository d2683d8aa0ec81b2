#include "mergesplit/rational.hpp"

#include <cctype>
#include <limits>
#include <ostream>

#include "mergesplit/error.hpp"

namespace mergesplit {

namespace {

using detail::wide_int;

wide_int wide_abs(wide_int x) { return x < 0 ? -x : x; }

wide_int wide_gcd(wide_int a, wide_int b) {
  a = wide_abs(a);
  b = wide_abs(b);
  while (b != 0) {
    wide_int t = a % b;
    a = b;
    b = t;
  }
  return a;
}

bool fits(wide_int x) {
  return x >= std::numeric_limits<std::int64_t>::min() &&
         x <= std::numeric_limits<std::int64_t>::max();
}

[[noreturn]] void parse_fail(std::string_view text, const char* why) {
  throw Error(Errc::parse_error,
              "invalid rational '" + std::string(text) + "': " + why);
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

wide_int parse_digits(std::string_view digits, std::string_view whole) {
  if (digits.empty()) parse_fail(whole, "missing digits");
  wide_int value = 0;
  for (char c : digits) {
    if (c < '0' || c > '9') parse_fail(whole, "unexpected character");
    value = value * 10 + (c - '0');
    if (value > std::numeric_limits<std::int64_t>::max()) parse_fail(whole, "out of range");
  }
  return value;
}

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw Error(Errc::invalid_argument, "rational with zero denominator");
  *this = from_wide(num, den);
}

Rational Rational::from_wide(wide_int num, wide_int den) {
  if (den < 0) {
    num = -num;
    den = -den;
  }
  wide_int g = wide_gcd(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  if (num == 0) den = 1;
  if (!fits(num) || !fits(den)) throw Error(Errc::overflow, "rational overflow");
  Rational r;
  r.num_ = static_cast<std::int64_t>(num);
  r.den_ = static_cast<std::int64_t>(den);
  return r;
}

Rational& Rational::operator+=(const Rational& rhs) {
  if (den_ == rhs.den_) return *this = from_wide(wide_int{num_} + rhs.num_, den_);
  return *this = from_wide(wide_int{num_} * rhs.den_ + wide_int{rhs.num_} * den_,
                           wide_int{den_} * rhs.den_);
}

Rational& Rational::operator-=(const Rational& rhs) { return *this += -rhs; }

Rational& Rational::operator*=(const Rational& rhs) {
  return *this = from_wide(wide_int{num_} * rhs.num_, wide_int{den_} * rhs.den_);
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.num_ == 0) throw Error(Errc::invalid_argument, "division by zero");
  return *this = from_wide(wide_int{num_} * rhs.den_, wide_int{den_} * rhs.num_);
}

Rational Rational::operator-() const { return from_wide(-wide_int{num_}, den_); }

std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) noexcept {
  // Denominators are positive, so cross-multiplication preserves order.
  wide_int l = wide_int{lhs.num_} * rhs.den_;
  wide_int r = wide_int{rhs.num_} * lhs.den_;
  if (l < r) return std::strong_ordering::less;
  if (l > r) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

Rational Rational::parse(std::string_view text) {
  std::string_view s = trim(text);
  if (s.empty()) parse_fail(text, "empty");
  bool negative = false;
  if (s.front() == '-' || s.front() == '+') {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  wide_int num = 0;
  wide_int den = 1;
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    num = parse_digits(trim(s.substr(0, slash)), text);
    den = parse_digits(trim(s.substr(slash + 1)), text);
    if (den == 0) parse_fail(text, "zero denominator");
  } else if (auto dot = s.find('.'); dot != std::string_view::npos) {
    std::string_view whole = s.substr(0, dot);
    std::string_view frac = s.substr(dot + 1);
    if (frac.empty()) parse_fail(text, "missing fractional digits");
    if (frac.size() > 9) parse_fail(text, "more than 9 fractional digits");
    num = parse_digits(whole, text);
    for (char c : frac) {
      if (c < '0' || c > '9') parse_fail(text, "unexpected character");
      num = num * 10 + (c - '0');
      den *= 10;
    }
  } else {
    num = parse_digits(s, text);
  }
  return from_wide(negative ? -num : num, den);
}

std::string Rational::str() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace mergesplit
