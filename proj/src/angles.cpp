#include "classprod/angles.hpp"

#include <bit>
#include <charconv>
#include <cmath>
#include <numbers>

namespace classprod {
namespace {

std::string rational_text(const Rational& r) {
  const BigInt num = numerator(r);
  const BigInt den = denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

double to_radians(const Rational& r) {
  return static_cast<double>(r) * std::numbers::pi;
}

bool is_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  return true;
}

// Exact value of a finite, nonnegative long double.
Rational exact_rational(long double x) {
  int exponent = 0;
  const long double mantissa = std::frexp(x, &exponent);
  // 64 mantissa bits cover long double on x86; a plain double needs 53.
  constexpr int kBits = 64;
  const auto whole = static_cast<unsigned long long>(std::ldexp(mantissa, kBits));
  Rational r{BigInt(whole)};
  const int shift = exponent - kBits;
  if (shift >= 0) {
    r *= Rational(BigInt(1) << shift);
  } else {
    r /= Rational(BigInt(1) << -shift);
  }
  return r;
}

}  // namespace

ScaledValue::ScaledValue(BigInt num, BigInt den) {
  if (den == 0) throw ContractError("zero denominator");
  value_ = Rational(num, den);
}

double ScaledValue::radians() const { return to_radians(value_); }
std::string ScaledValue::to_string() const { return rational_text(value_); }

Angle::Angle(BigInt num, BigInt den) {
  if (den == 0) throw ContractError("zero denominator");
  *this = Angle(Rational(num, den));
}

Angle::Angle(const Rational& coefficient) : value_(coefficient) {
  if (value_ < 0 || value_ > 1)
    throw RangeError("angle " + rational_text(value_) + "*pi is outside [0, pi]");
}

double Angle::radians() const { return to_radians(value_); }
std::string Angle::to_string() const { return rational_text(value_); }

AngleInterval::AngleInterval(Angle lo, Angle hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
  if (hi_ < lo_)
    throw RangeError("empty interval [" + lo_.to_string() + ", " + hi_.to_string() + "]");
}

std::string AngleInterval::to_string() const {
  return "[" + lo_.to_string() + ", " + hi_.to_string() + "]";
}

SignPattern::SignPattern(int size, std::uint64_t minus_mask) : size_(size), mask_(minus_mask) {
  if (size < 0 || size > kMaxSize) throw ContractError("sign pattern size out of range");
  if (size < 64 && (minus_mask >> size) != 0)
    throw ContractError("sign mask has bits beyond the pattern size");
}

SignPattern SignPattern::from_signs(std::span<const int> signs) {
  if (signs.size() > static_cast<std::size_t>(kMaxSize))
    throw ContractError("sign pattern too long");
  std::uint64_t mask = 0;
  for (int s : signs) {
    if (s != 1 && s != -1) throw ContractError("signs must be +1 or -1");
    mask = (mask << 1) | (s == -1 ? 1U : 0U);
  }
  return SignPattern(static_cast<int>(signs.size()), mask);
}

SignPattern SignPattern::parse(std::string_view text) {
  std::vector<int> signs;
  for (char c : text) {
    if (c == '+') signs.push_back(1);
    else if (c == '-') signs.push_back(-1);
    else throw SyntaxError("sign pattern may only contain '+' and '-'");
  }
  return from_signs(signs);
}

int SignPattern::minus_count() const noexcept { return std::popcount(mask_); }

SignPattern SignPattern::negated() const {
  const std::uint64_t all = size_ == 64 ? ~0ULL : ((1ULL << size_) - 1);
  return SignPattern(size_, ~mask_ & all);
}

SignPattern SignPattern::prefix(int count) const {
  if (count < 0 || count > size_) throw ContractError("prefix longer than pattern");
  return SignPattern(count, mask_ >> (size_ - count));
}

std::vector<int> SignPattern::to_signs() const {
  std::vector<int> out(static_cast<std::size_t>(size_));
  for (int i = 0; i < size_; ++i) out[static_cast<std::size_t>(i)] = sign(i);
  return out;
}

std::string SignPattern::to_string() const {
  std::string s;
  for (int i = 0; i < size_; ++i) s.push_back(is_minus(i) ? '-' : '+');
  return s;
}

ScaledValue rational_sum(const SignPattern& signs, std::span<const Angle> angles) {
  if (angles.empty()) throw ContractError("rational_sum needs at least one angle");
  if (static_cast<std::size_t>(signs.size()) != angles.size())
    throw ContractError("sign and angle lists differ in length");
  Rational total{0};
  for (std::size_t i = 0; i < angles.size(); ++i) {
    if (signs.is_minus(static_cast<int>(i))) total -= angles[i].coefficient();
    else total += angles[i].coefficient();
  }
  return ScaledValue(total);
}

ScaledValue rational_sum(std::span<const int> signs, std::span<const Angle> angles) {
  if (signs.size() != angles.size())
    throw ContractError("sign and angle lists differ in length");
  return rational_sum(SignPattern::from_signs(signs), angles);
}

Rational limit_denominator(const Rational& value, const BigInt& max_den) {
  if (max_den < 1) throw ContractError("max denominator must be positive");
  if (value < 0) return -limit_denominator(-value, max_den);
  if (denominator(value) <= max_den) return value;

  BigInt p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  BigInt n = numerator(value), d = denominator(value);
  while (true) {
    const BigInt a = n / d;
    const BigInt q2 = q0 + a * q1;
    if (q2 > max_den) break;
    const BigInt p2 = p0 + a * p1;
    p0 = p1;
    q0 = q1;
    p1 = p2;
    q1 = q2;
    const BigInt r = n - a * d;
    n = d;
    d = r;
  }
  const BigInt k = (max_den - q0) / q1;
  const Rational bound1(p0 + k * p1, q0 + k * q1);
  const Rational bound2(p1, q1);
  return abs(bound2 - value) <= abs(bound1 - value) ? bound2 : bound1;
}

ParsedAngle parse_angle(std::string_view text, const AngleParseOptions& options) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  if (text.empty()) throw SyntaxError("empty angle");

  bool decimal = options.radians;
  if (text.size() > 3 && text.substr(text.size() - 3) == "rad") {
    decimal = true;
    text = trim(text.substr(0, text.size() - 3));
  }

  if (!decimal) {
    std::string_view num_text = text;
    std::string_view den_text = "1";
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
      num_text = trim(text.substr(0, slash));
      den_text = trim(text.substr(slash + 1));
    }
    bool negative = false;
    if (!num_text.empty() && (num_text.front() == '-' || num_text.front() == '+')) {
      negative = num_text.front() == '-';
      num_text.remove_prefix(1);
    }
    if (!is_digits(num_text) || !is_digits(den_text))
      throw SyntaxError("expected p/q (a rational multiple of pi), got '" + std::string(text) + "'");
    BigInt num{std::string(num_text)};
    const BigInt den{std::string(den_text)};
    if (den == 0) throw SyntaxError("zero denominator in '" + std::string(text) + "'");
    if (negative) num = -num;
    return ParsedAngle{Angle(num, den), false, 0.0};
  }

  double x = 0.0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, x);
  if (ec != std::errc() || ptr != last || !std::isfinite(x))
    throw SyntaxError("expected a decimal number of radians, got '" + std::string(text) + "'");
  if (x < 0.0 || x > std::numbers::pi)
    throw RangeError("angle " + std::string(text) + " rad is outside [0, pi]");

  const long double coefficient = static_cast<long double>(x) / std::numbers::pi_v<long double>;
  Rational snapped = limit_denominator(exact_rational(coefficient), BigInt(options.max_denominator));
  if (snapped < 0 || snapped > 1)
    throw RangeError("angle " + std::string(text) + " rad is outside [0, pi]");
  return ParsedAngle{Angle(snapped), true, x};
}

}  // namespace classprod
