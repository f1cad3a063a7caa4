#pragma once

// When is C(l_1)...C(l_n) all of SU(2)?
//
// The product covers SU(2) exactly when it meets every class, i.e. when
// I in C(l_1)...C(l_n)C(l) for every l in [0, pi]. Each membership inequality
// over n + 1 angles is linear in the extra angle, so holding for every l means
// holding at the worst l: replace +l by pi and -l by 0. Pairing the results
// pattern-with-negation gives one two-sided inequality per canonical pattern:
//
//   -(j - 1)pi <= S_j <= (n - j - 1)pi,   S_j a signed sum with j minus signs.

#include <span>
#include <string>
#include <vector>

#include "classprod/membership.hpp"

namespace classprod {

/// lower <= sum_i signs_i * l_i <= upper.
struct TwoSidedInequality {
  SignPattern signs;
  ScaledValue lower;
  ScaledValue upper;

  bool holds(std::span<const Angle> angles) const;
  std::string to_string() const;

  friend bool operator==(const TwoSidedInequality&, const TwoSidedInequality&) = default;
  friend auto operator<=>(const TwoSidedInequality& a, const TwoSidedInequality& b) {
    if (auto c = a.signs <=> b.signs; c != 0) return c;
    if (auto c = a.lower <=> b.lower; c != 0) return c;
    return a.upper <=> b.upper;
  }
};

/// Which minus counts j take part in the system.
enum class QuantifierRange {
  /// 0 <= j <= floor(n/2). Exact characterization of surjectivity.
  corrected,
  /// 0 <= j < n/2. Drops the j = n/2 family for even n, which admits
  /// non-surjective tuples such as (3pi/4, pi/4).
  paper_literal,
};

/// A pattern is canonical when it has fewer minus signs than its negation, or
/// the same number and starts with '+'.
bool is_canonical(const SignPattern& p);
SignPattern canonical(const SignPattern& p);

/// One two-sided inequality per canonical pattern over n positions (restricted
/// by `range`), in lexicographic pattern order.
std::vector<TwoSidedInequality> surjectivity_system(int n, QuantifierRange range = QuantifierRange::corrected,
                                                    int cap = kDefaultCap);

struct SurjectivityDecision {
  bool surjective = false;
  std::vector<TwoSidedInequality> violated;
};

/// Decides C(l_1)...C(l_n) = SU(2) with the two-sided system.
SurjectivityDecision is_surjective(std::span<const Angle> angles,
                                   QuantifierRange range = QuantifierRange::corrected,
                                   int cap = kDefaultCap);

/// Same question via reachable(angles) == [0, pi]; no cap.
bool is_surjective_by_interval(std::span<const Angle> angles);

/// Builds the surjectivity system mechanically from membership_system(n + 1)
/// by the substitutions +l_{n+1} -> pi and -l_{n+1} -> 0, then pairs each
/// one-sided result with the one for the negated pattern.
std::vector<TwoSidedInequality> derive_surjectivity_from_membership(int n, int cap = kDefaultCap);

/// Sorts and deduplicates in place.
void canonicalize(std::vector<TwoSidedInequality>& system);

/// C(n, k) exactly; zero outside 0 <= k <= n.
BigInt binomial(int n, int k);

}  // namespace classprod
