#include "classprod/membership.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "classprod/detail/common_scale.hpp"

namespace classprod {
namespace {

void check_angle_count(std::span<const Angle> angles, int cap) {
  check_cap(static_cast<int>(angles.size()), cap, "angle count");
}

bool membership_parity(int count_angles, std::uint64_t mask) {
  return (std::popcount(mask) % 2) == ((count_angles - 1) % 2);
}

// Calls visit(mask) for every violated membership inequality, in lexicographic
// order. Stops early when visit returns false.
template <class Int, class Visit>
void scan_membership(const detail::ScaledTuple<Int>& t, Visit&& visit) {
  const int n = static_cast<int>(t.nums.size());
  Int total = 0;
  for (const Int& v : t.nums) total += v;
  const std::uint64_t end = 1ULL << n;
  for (std::uint64_t mask = 0; mask < end; ++mask) {
    if (!membership_parity(n, mask)) continue;
    const int m = std::popcount(mask);
    Int minus_part = 0;
    for (int i = 0; i < n; ++i)
      if ((mask >> (n - 1 - i)) & 1U) minus_part += t.nums[static_cast<std::size_t>(i)];
    const Int sum = total - 2 * minus_part;
    const Int bound = Int(n - 1 - m) * t.unit;
    if (sum > bound && !visit(mask)) return;
  }
}

}  // namespace

bool SignedInequality::holds(std::span<const Angle> angles) const {
  return rational_sum(signs, angles) <= bound;
}

std::string SignedInequality::to_string() const {
  std::string out;
  for (int i = 0; i < signs.size(); ++i) {
    if (i > 0) out += ' ';
    out += signs.is_minus(i) ? "−" : "+";
    out += "λ" + std::to_string(i + 1);
  }
  return out + " ≤ " + format_pi_multiple(bound);
}

bool InequalitySystem::holds(std::span<const Angle> angles) const {
  return std::all_of(inequalities.begin(), inequalities.end(),
                     [&](const SignedInequality& q) { return q.holds(angles); });
}

void InequalitySystem::canonicalize() {
  std::sort(inequalities.begin(), inequalities.end());
  inequalities.erase(std::unique(inequalities.begin(), inequalities.end()), inequalities.end());
}

std::string format_pi_multiple(const ScaledValue& v) {
  const BigInt num = v.num();
  const BigInt den = v.den();
  if (num == 0) return "0";
  std::string s;
  if (num == 1) s = "π";
  else if (num == -1) s = "-π";
  else s = num.str() + "π";
  if (den != 1) s += "/" + den.str();
  return s;
}

void check_cap(int n, int cap, const char* what) {
  if (n < 1) throw ContractError(std::string(what) + " must be at least 1");
  if (cap > kMaxCap)
    throw ResourceError("cap " + std::to_string(cap) + " exceeds the hard limit " +
                        std::to_string(kMaxCap));
  if (n > cap)
    throw ResourceError(std::string(what) + " " + std::to_string(n) + " exceeds the cap " +
                        std::to_string(cap) + " (the inequality system has 2^(N-1) entries)");
}

ScaledValue membership_bound(int count_angles, int minus_count) {
  return ScaledValue::multiple_of_pi(count_angles - 1 - minus_count);
}

InequalitySystem membership_system(int count_angles, int cap) {
  check_cap(count_angles, cap, "angle count");
  InequalitySystem sys;
  sys.count_angles = count_angles;
  sys.inequalities.reserve(std::size_t{1} << (count_angles - 1));
  const std::uint64_t end = 1ULL << count_angles;
  for (std::uint64_t mask = 0; mask < end; ++mask) {
    if (!membership_parity(count_angles, mask)) continue;
    SignPattern p(count_angles, mask);
    sys.inequalities.push_back({p, membership_bound(count_angles, p.minus_count())});
  }
  return sys;
}

MembershipDecision contains_identity(std::span<const Angle> angles, int cap) {
  check_angle_count(angles, cap);
  const int n = static_cast<int>(angles.size());
  MembershipDecision out;
  detail::with_scaled(angles, [&](const auto& t) {
    scan_membership(t, [&](std::uint64_t mask) {
      SignPattern p(n, mask);
      out.violated.push_back({p, membership_bound(n, p.minus_count())});
      return true;
    });
  });
  out.contains_identity = out.violated.empty();
  return out;
}

bool satisfies_membership_system(std::span<const Angle> angles, int cap) {
  check_angle_count(angles, cap);
  bool ok = true;
  detail::with_scaled(angles, [&](const auto& t) {
    scan_membership(t, [&](std::uint64_t) {
      ok = false;
      return false;
    });
  });
  return ok;
}

bool contains_identity_by_interval(std::span<const Angle> angles) {
  if (angles.empty()) throw ContractError("need at least one angle");
  if (angles.size() == 1) return angles.front() == Angle::zero();
  return reachable(angles.first(angles.size() - 1)).contains(angles.back());
}

AngleInterval interval_step(const AngleInterval& current, const Angle& step) {
  const Rational& a = current.lo().coefficient();
  const Rational& b = current.hi().coefficient();
  const Rational& l = step.coefficient();

  // Nearest point of [a, b] to l gives the smallest |mu - l|.
  Rational lo = std::max({Rational(a - l), Rational(l - b), Rational(0)});

  // min(mu + l, 2 - mu - l) peaks at mu = 1 - l with value 1 (i.e. pi).
  const Rational peak = 1 - l;
  Rational hi;
  if (a <= peak && peak <= b) hi = 1;
  else if (b < peak) hi = b + l;
  else hi = 2 - a - l;

  if (hi < lo)
    throw std::logic_error("interval_step produced an empty interval; endpoint case analysis is wrong");
  return AngleInterval(Angle(lo), Angle(hi));
}

AngleInterval reachable(std::span<const Angle> angles) {
  if (angles.empty()) throw ContractError("reachable needs at least one angle");
  AngleInterval acc = AngleInterval::point(angles.front());
  for (const Angle& a : angles.subspan(1)) acc = interval_step(acc, a);
  return acc;
}

}  // namespace classprod
