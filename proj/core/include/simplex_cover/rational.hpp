#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>

namespace simplex_cover {

/// Raised for malformed textual input (rationals, points, records).
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Exact rational number in canonical form (den > 0, gcd(|num|, den) = 1).
///
/// Values whose numerator and denominator both fit in 62 bits are stored
/// inline and combined with 128-bit intermediates; anything larger is
/// promoted to a GMP rational held behind an immutable shared pointer.
/// The representation is canonical: a value is inline iff it fits, so
/// equality never has to compare across representations.
class Rational {
 public:
  Rational() noexcept = default;
  Rational(std::int64_t value);  // NOLINT(google-explicit-constructor)
  Rational(std::int64_t num, std::int64_t den);

  /// Parses `-?digits(/digits)?`. Throws ParseError on malformed text or a
  /// zero denominator.
  static Rational parse(std::string_view text);

  /// Canonical "p/q", or "p" when q = 1.
  std::string str() const;

  int sign() const noexcept;
  bool is_integer() const noexcept;
  /// Nearest double; used only for rendering.
  double to_double() const;

  /// Greatest integer <= *this. Throws std::overflow_error past int64.
  std::int64_t floor() const;

  Rational operator-() const;
  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  /// Throws std::domain_error on division by zero.
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);

  friend bool operator==(const Rational& a, const Rational& b) noexcept;
  friend std::strong_ordering operator<=>(const Rational& a,
                                          const Rational& b) noexcept;

  /// True when the value lives in the inline 62-bit representation.
  bool is_small() const noexcept { return big_ == nullptr; }

  struct Big;

 private:
  static Rational from_big(Big value);
  Big to_big() const;

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  std::shared_ptr<const Big> big_;

  friend struct RationalOps;
};

/// rat_floor as a free function.
inline std::int64_t floor(const Rational& r) { return r.floor(); }

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace simplex_cover
