#pragma once

// Exact arithmetic on rational multiples of pi.
//
// Every quantity here is stored as the coefficient of pi, so the angle pi/2 is
// the rational 1/2. Coefficients are arbitrary precision; nothing in this
// header rounds.

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "classprod/errors.hpp"

namespace classprod {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// An unconstrained rational multiple of pi (sums of angles, inequality bounds).
class ScaledValue {
 public:
  ScaledValue() = default;
  explicit ScaledValue(Rational coefficient) : value_(std::move(coefficient)) {}
  ScaledValue(BigInt num, BigInt den);
  static ScaledValue multiple_of_pi(std::int64_t k) { return ScaledValue(Rational(k)); }

  const Rational& coefficient() const noexcept { return value_; }
  BigInt num() const { return numerator(value_); }
  BigInt den() const { return denominator(value_); }
  double radians() const;

  /// "p/q", or "p" when q = 1.
  std::string to_string() const;

  friend ScaledValue operator+(const ScaledValue& a, const ScaledValue& b) {
    return ScaledValue(a.value_ + b.value_);
  }
  friend ScaledValue operator-(const ScaledValue& a, const ScaledValue& b) {
    return ScaledValue(a.value_ - b.value_);
  }
  ScaledValue operator-() const { return ScaledValue(-value_); }

  friend bool operator==(const ScaledValue& a, const ScaledValue& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const ScaledValue& a, const ScaledValue& b) {
    if (a.value_ < b.value_) return std::strong_ordering::less;
    if (b.value_ < a.value_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

 private:
  Rational value_;
};

/// A conjugacy-class angle: a rational multiple of pi lying in [0, pi].
class Angle {
 public:
  /// The zero angle (class of the identity).
  Angle() = default;
  /// Throws RangeError unless 0 <= num/den <= 1, ContractError if den == 0.
  Angle(BigInt num, BigInt den);
  explicit Angle(const Rational& coefficient);

  static Angle zero() { return Angle(); }
  static Angle pi() { return Angle(1, 1); }

  const Rational& coefficient() const noexcept { return value_; }
  BigInt num() const { return numerator(value_); }
  BigInt den() const { return denominator(value_); }
  double radians() const;
  ScaledValue scaled() const { return ScaledValue(value_); }
  std::string to_string() const;

  friend bool operator==(const Angle& a, const Angle& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Angle& a, const Angle& b) {
    if (a.value_ < b.value_) return std::strong_ordering::less;
    if (b.value_ < a.value_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

 private:
  Rational value_{0};
};

/// Closed subinterval [lo, hi] of [0, pi].
class AngleInterval {
 public:
  AngleInterval() = default;
  /// Throws RangeError if lo > hi.
  AngleInterval(Angle lo, Angle hi);
  static AngleInterval point(const Angle& a) { return AngleInterval(a, a); }
  static AngleInterval full() { return AngleInterval(Angle::zero(), Angle::pi()); }

  const Angle& lo() const noexcept { return lo_; }
  const Angle& hi() const noexcept { return hi_; }
  bool contains(const Angle& a) const { return lo_ <= a && a <= hi_; }
  bool is_full() const { return lo_ == Angle::zero() && hi_ == Angle::pi(); }
  std::string to_string() const;

  friend bool operator==(const AngleInterval&, const AngleInterval&) = default;

 private:
  Angle lo_;
  Angle hi_;
};

/// A sign pattern (e_1, ..., e_n) with e_i in {+1, -1}.
///
/// Bit (n-1-i) of the mask is set when position i carries a minus sign, so the
/// numeric order of masks is the lexicographic order of patterns with + < -.
class SignPattern {
 public:
  static constexpr int kMaxSize = 62;

  SignPattern() = default;
  SignPattern(int size, std::uint64_t minus_mask);
  /// From a list of +1/-1 entries; throws ContractError on anything else.
  static SignPattern from_signs(std::span<const int> signs);
  /// From text such as "+--".
  static SignPattern parse(std::string_view text);

  int size() const noexcept { return size_; }
  std::uint64_t minus_mask() const noexcept { return mask_; }
  bool is_minus(int i) const noexcept { return (mask_ >> (size_ - 1 - i)) & 1U; }
  int sign(int i) const noexcept { return is_minus(i) ? -1 : 1; }
  int minus_count() const noexcept;
  SignPattern negated() const;
  /// The first `count` positions.
  SignPattern prefix(int count) const;
  std::vector<int> to_signs() const;
  std::string to_string() const;

  friend bool operator==(const SignPattern&, const SignPattern&) = default;
  friend auto operator<=>(const SignPattern& a, const SignPattern& b) {
    if (auto c = a.size_ <=> b.size_; c != 0) return c;
    return a.mask_ <=> b.mask_;
  }

 private:
  int size_ = 0;
  std::uint64_t mask_ = 0;
};

/// Exact value of sum_i signs_i * angles_i. Throws ContractError on length
/// mismatch or empty input.
ScaledValue rational_sum(const SignPattern& signs, std::span<const Angle> angles);
ScaledValue rational_sum(std::span<const int> signs, std::span<const Angle> angles);

struct AngleParseOptions {
  /// Largest denominator used when snapping a decimal to a rational.
  std::int64_t max_denominator = 1'000'000;
  /// Treat unmarked decimals as radians (otherwise "rad" suffix is required).
  bool radians = false;
};

struct ParsedAngle {
  Angle angle;
  /// True when the input was a decimal and had to be snapped.
  bool approximate = false;
  /// The decimal as given (radians); only meaningful when approximate.
  double input_radians = 0.0;
};

/// Parses "p/q" (meaning (p/q)*pi), an integer "0"/"1", or a decimal number of
/// radians marked with a "rad" suffix ("1.5708rad"). Throws SyntaxError or
/// RangeError.
ParsedAngle parse_angle(std::string_view text, const AngleParseOptions& options = {});

/// Best rational approximation of `value` with denominator <= max_den.
Rational limit_denominator(const Rational& value, const BigInt& max_den);

}  // namespace classprod
