#pragma once

// When does a product of SU(2) conjugacy classes C(l_1)...C(l_N) contain the
// identity?
//
// Two independent answers live here:
//   * a closed system of 2^(N-1) signed-sum inequalities, and
//   * reachable-interval propagation, which folds the three-class criterion
//     |a - b| <= c <= min(a + b, 2pi - a - b) over the list one class at a time.
// They must agree on every input; the test suites check that they do.

#include <span>
#include <string>
#include <vector>

#include "classprod/angles.hpp"

namespace classprod {

/// Largest angle count the exponential inequality routes accept by default.
inline constexpr int kDefaultCap = 20;
/// Hard ceiling for any configured cap.
inline constexpr int kMaxCap = 26;

/// sum_i signs_i * l_i <= bound, with the bound a multiple of pi.
struct SignedInequality {
  SignPattern signs;
  ScaledValue bound;

  bool holds(std::span<const Angle> angles) const;
  /// Human-readable form such as "+λ1 −λ2 −λ3 ≤ 0".
  std::string to_string() const;

  friend bool operator==(const SignedInequality&, const SignedInequality&) = default;
  friend auto operator<=>(const SignedInequality& a, const SignedInequality& b) {
    if (auto c = a.signs <=> b.signs; c != 0) return c;
    return a.bound <=> b.bound;
  }
};

struct InequalitySystem {
  int count_angles = 0;
  std::vector<SignedInequality> inequalities;

  std::size_t size() const noexcept { return inequalities.size(); }
  bool holds(std::span<const Angle> angles) const;
  /// Sorts into canonical (lexicographic pattern) order and drops duplicates.
  void canonicalize();

  friend bool operator==(const InequalitySystem&, const InequalitySystem&) = default;
};

/// Formats k*pi for a rational k: "0", "π", "2π", "-π", "3π/4".
std::string format_pi_multiple(const ScaledValue& v);

/// Throws ContractError if n < 1 and ResourceError if n > cap (or cap > kMaxCap).
void check_cap(int n, int cap, const char* what);

/// Right-hand side (N - 1 - m)*pi of the membership inequality with m minus signs.
ScaledValue membership_bound(int count_angles, int minus_count);

/// Every pattern over N positions whose minus count m has the parity of N - 1,
/// with bound (N - 1 - m)*pi, in lexicographic order. Exactly 2^(N-1) entries.
InequalitySystem membership_system(int count_angles, int cap = kDefaultCap);

struct MembershipDecision {
  bool contains_identity = false;
  /// All violated inequalities, in canonical order; empty when true.
  std::vector<SignedInequality> violated;
};

/// Decides I in C(l_1)...C(l_N) with the inequality system.
MembershipDecision contains_identity(std::span<const Angle> angles, int cap = kDefaultCap);

/// Same question, inequality route, without collecting violations.
bool satisfies_membership_system(std::span<const Angle> angles, int cap = kDefaultCap);

/// Same question answered by interval propagation; no cap.
bool contains_identity_by_interval(std::span<const Angle> angles);

/// Union over mu in `current` of the class angles reachable in C(mu)C(step).
AngleInterval interval_step(const AngleInterval& current, const Angle& step);

/// Class angles of elements of C(l_1)...C(l_N). Throws ContractError on empty input.
AngleInterval reachable(std::span<const Angle> angles);

}  // namespace classprod
