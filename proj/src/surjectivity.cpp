#include "classprod/surjectivity.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>

#include "classprod/detail/common_scale.hpp"

namespace classprod {
namespace {

bool in_range(int n, int j, QuantifierRange range) {
  return range == QuantifierRange::corrected ? 2 * j <= n : 2 * j < n;
}

ScaledValue lower_bound_for(int j) { return ScaledValue::multiple_of_pi(-(j - 1)); }
ScaledValue upper_bound_for(int n, int j) { return ScaledValue::multiple_of_pi(n - j - 1); }

template <class Int, class Visit>
void scan_surjectivity(const detail::ScaledTuple<Int>& t, QuantifierRange range, Visit&& visit) {
  const int n = static_cast<int>(t.nums.size());
  const std::uint64_t end = 1ULL << n;
  for (std::uint64_t mask = 0; mask < end; ++mask) {
    const SignPattern p(n, mask);
    if (!is_canonical(p)) continue;
    const int j = p.minus_count();
    if (!in_range(n, j, range)) continue;
    const Int sum = detail::signed_sum(t.nums, mask);
    const Int lower = Int(-(j - 1)) * t.unit;
    const Int upper = Int(n - j - 1) * t.unit;
    if ((sum < lower || sum > upper) && !visit(p)) return;
  }
}

}  // namespace

bool TwoSidedInequality::holds(std::span<const Angle> angles) const {
  const ScaledValue s = rational_sum(signs, angles);
  return lower <= s && s <= upper;
}

std::string TwoSidedInequality::to_string() const {
  std::string middle;
  for (int i = 0; i < signs.size(); ++i) {
    if (i > 0) middle += ' ';
    middle += signs.is_minus(i) ? "−" : "+";
    middle += "λ" + std::to_string(i + 1);
  }
  return format_pi_multiple(lower) + " ≤ " + middle + " ≤ " + format_pi_multiple(upper);
}

bool is_canonical(const SignPattern& p) {
  const int m = p.minus_count();
  const int n = p.size();
  if (2 * m != n) return 2 * m < n;
  return n == 0 || !p.is_minus(0);
}

SignPattern canonical(const SignPattern& p) { return is_canonical(p) ? p : p.negated(); }

std::vector<TwoSidedInequality> surjectivity_system(int n, QuantifierRange range, int cap) {
  check_cap(n, cap, "class count");
  std::vector<TwoSidedInequality> out;
  const std::uint64_t end = 1ULL << n;
  for (std::uint64_t mask = 0; mask < end; ++mask) {
    const SignPattern p(n, mask);
    if (!is_canonical(p)) continue;
    const int j = p.minus_count();
    if (!in_range(n, j, range)) continue;
    out.push_back({p, lower_bound_for(j), upper_bound_for(n, j)});
  }
  return out;
}

SurjectivityDecision is_surjective(std::span<const Angle> angles, QuantifierRange range, int cap) {
  const int n = static_cast<int>(angles.size());
  check_cap(n, cap, "class count");
  SurjectivityDecision out;
  detail::with_scaled(angles, [&](const auto& t) {
    scan_surjectivity(t, range, [&](const SignPattern& p) {
      const int j = p.minus_count();
      out.violated.push_back({p, lower_bound_for(j), upper_bound_for(n, j)});
      return true;
    });
  });
  out.surjective = out.violated.empty();
  return out;
}

bool is_surjective_by_interval(std::span<const Angle> angles) {
  return reachable(angles).is_full();
}

std::vector<TwoSidedInequality> derive_surjectivity_from_membership(int n, int cap) {
  check_cap(n, cap, "class count");
  const InequalitySystem membership = membership_system(n + 1, cap);

  struct Bounds {
    std::optional<ScaledValue> lower;
    std::optional<ScaledValue> upper;
  };
  std::map<SignPattern, Bounds> paired;

  for (const SignedInequality& q : membership.inequalities) {
    // Worst case over l_{n+1} in [0, pi]: +l_{n+1} -> pi, -l_{n+1} -> 0.
    const SignPattern head = q.signs.prefix(n);
    const bool last_plus = !q.signs.is_minus(n);
    const ScaledValue bound = last_plus ? q.bound - ScaledValue::multiple_of_pi(1) : q.bound;

    // head . l <= bound. For a non-canonical head this is a lower bound on the
    // negated (canonical) pattern: (-head) . l >= -bound.
    if (is_canonical(head)) {
      auto& slot = paired[head].upper;
      if (slot && *slot != bound) throw std::logic_error("conflicting upper bounds in derivation");
      slot = bound;
    } else {
      auto& slot = paired[head.negated()].lower;
      if (slot && *slot != -bound) throw std::logic_error("conflicting lower bounds in derivation");
      slot = -bound;
    }
  }

  std::vector<TwoSidedInequality> out;
  out.reserve(paired.size());
  for (auto& [pattern, b] : paired) {
    if (!b.lower || !b.upper)
      throw std::logic_error("derivation left pattern " + pattern.to_string() + " one-sided");
    out.push_back({pattern, *b.lower, *b.upper});
  }
  canonicalize(out);
  return out;
}

void canonicalize(std::vector<TwoSidedInequality>& system) {
  std::sort(system.begin(), system.end());
  system.erase(std::unique(system.begin(), system.end()), system.end());
}

BigInt binomial(int n, int k) {
  if (n < 0 || k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  BigInt r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace classprod
