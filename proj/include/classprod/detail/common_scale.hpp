#pragma once

// Angles rewritten over a common denominator so that signed sums become plain
// integer sums: angle_i = nums[i] / unit * pi. When everything fits with room
// to spare, a 64-bit copy is used for the hot loops; otherwise the big-integer
// copy is used. Both paths are exact.

#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <vector>

#include "classprod/angles.hpp"

namespace classprod::detail {

template <class Int>
struct ScaledTuple {
  std::vector<Int> nums;
  Int unit;
};

inline ScaledTuple<BigInt> common_scale(std::span<const Angle> angles) {
  BigInt unit = 1;
  for (const Angle& a : angles) unit = boost::multiprecision::lcm(unit, a.den());
  ScaledTuple<BigInt> out{{}, unit};
  out.nums.reserve(angles.size());
  for (const Angle& a : angles) out.nums.push_back(a.num() * (unit / a.den()));
  return out;
}

/// 64-bit copy, available when every signed sum and every bound k*unit with
/// |k| <= n + 1 stays far from overflow.
inline std::optional<ScaledTuple<std::int64_t>> narrow(const ScaledTuple<BigInt>& wide) {
  const BigInt limit = BigInt(std::numeric_limits<std::int64_t>::max() / 4);
  const BigInt worst = wide.unit * BigInt(2 * (wide.nums.size() + 2));
  if (worst > limit) return std::nullopt;
  ScaledTuple<std::int64_t> out{{}, static_cast<std::int64_t>(wide.unit)};
  out.nums.reserve(wide.nums.size());
  for (const BigInt& v : wide.nums) out.nums.push_back(static_cast<std::int64_t>(v));
  return out;
}

/// sum_i e_i * nums[i] for the pattern encoded by `minus_mask` over n positions.
template <class Int>
Int signed_sum(const std::vector<Int>& nums, std::uint64_t minus_mask) {
  const int n = static_cast<int>(nums.size());
  Int s = 0;
  for (int i = 0; i < n; ++i) {
    if ((minus_mask >> (n - 1 - i)) & 1U) s -= nums[static_cast<std::size_t>(i)];
    else s += nums[static_cast<std::size_t>(i)];
  }
  return s;
}

/// Runs `body` on the 64-bit tuple when it fits, else on the big-integer one.
template <class Body>
auto with_scaled(std::span<const Angle> angles, Body&& body) {
  auto wide = common_scale(angles);
  if (auto fast = narrow(wide)) return body(*fast);
  return body(wide);
}

}  // namespace classprod::detail
