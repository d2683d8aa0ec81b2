#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace mergesplit {

namespace detail {
__extension__ typedef __int128 wide_int;
}  // namespace detail

/// Exact rational number over 64-bit integers.
///
/// Always normalized: the denominator is positive and coprime to the
/// numerator. Intermediate products are formed in 128 bits; a result that
/// does not fit back into 64 bits raises Error(Errc::overflow) instead of
/// wrapping, so a comparison verdict is either exact or absent.
class Rational {
public:
  constexpr Rational() noexcept = default;
  constexpr Rational(std::int64_t value) noexcept : num_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(std::int64_t num, std::int64_t den);

  std::int64_t num() const noexcept { return num_; }
  std::int64_t den() const noexcept { return den_; }

  bool is_zero() const noexcept { return num_ == 0; }
  bool is_negative() const noexcept { return num_ < 0; }
  bool is_positive() const noexcept { return num_ > 0; }

  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
  Rational operator-() const;

  friend bool operator==(const Rational&, const Rational&) noexcept = default;
  friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) noexcept;

  /// Accepts `p`, `p/q`, or a decimal with at most 9 fractional digits
  /// (read exactly as p/10^k). Surrounding whitespace is ignored.
  static Rational parse(std::string_view text);

  /// `p` for integers, `p/q` otherwise; parse(str()) == *this.
  std::string str() const;

private:
  static Rational from_wide(detail::wide_int num, detail::wide_int den);

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace mergesplit
