#include "classprod/selfcheck.hpp"

#include <random>

#include "classprod/membership.hpp"
#include "classprod/qh_cp1.hpp"
#include "classprod/sampling.hpp"
#include "classprod/surjectivity.hpp"

namespace classprod {
namespace {

// All tuples of length n over {0, 1/steps, ..., 1} (coefficients of pi).
template <class Visit>
void for_each_grid_tuple(int n, int steps, Visit&& visit) {
  std::vector<int> idx(static_cast<std::size_t>(n), 0);
  std::vector<Angle> t(static_cast<std::size_t>(n));
  while (true) {
    for (int i = 0; i < n; ++i) t[static_cast<std::size_t>(i)] = Angle(idx[static_cast<std::size_t>(i)], steps);
    visit(t);
    int i = 0;
    while (i < n && ++idx[static_cast<std::size_t>(i)] > steps) idx[static_cast<std::size_t>(i++)] = 0;
    if (i == n) return;
  }
}

CheckResult three_class_table() {
  int mismatches = 0;
  int total = 0;
  for_each_grid_tuple(3, 6, [&](const std::vector<Angle>& t) {
    const Rational& a = t[0].coefficient();
    const Rational& b = t[1].coefficient();
    const Rational& c = t[2].coefficient();
    const bool direct = abs(a - b) <= c && c <= std::min(Rational(a + b), Rational(2 - a - b));
    mismatches += direct != contains_identity(t).contains_identity;
    ++total;
  });
  return {"three-class criterion on the pi/6 grid", mismatches == 0,
          std::to_string(total) + " triples, " + std::to_string(mismatches) + " mismatches"};
}

CheckResult routes_agree(std::uint64_t seed) {
  int mismatches = 0;
  int total = 0;
  for (int n = 1; n <= 4; ++n)
    for_each_grid_tuple(n, 6, [&](const std::vector<Angle>& t) {
      mismatches += satisfies_membership_system(t) != contains_identity_by_interval(t);
      mismatches += is_surjective(t).surjective != is_surjective_by_interval(t);
      ++total;
    });
  std::mt19937_64 rng(seed);
  for (int k = 0; k < 500; ++k) {
    const int n = std::uniform_int_distribution<int>(1, 8)(rng);
    std::vector<Angle> t;
    for (int i = 0; i < n; ++i) {
      const int den = std::uniform_int_distribution<int>(1, 24)(rng);
      t.emplace_back(std::uniform_int_distribution<int>(0, den)(rng), den);
    }
    mismatches += satisfies_membership_system(t) != contains_identity_by_interval(t);
    mismatches += is_surjective(t).surjective != is_surjective_by_interval(t);
    ++total;
  }
  return {"inequality and interval routes agree", mismatches == 0,
          std::to_string(total) + " tuples, " + std::to_string(mismatches) + " mismatches"};
}

CheckResult system_sizes() {
  bool ok = true;
  for (int n = 1; n <= 12; ++n) ok = ok && membership_system(n).size() == (std::size_t{1} << (n - 1));
  return {"membership system has 2^(N-1) inequalities for N <= 12", ok, ""};
}

CheckResult qh_matches_membership() {
  bool ok = true;
  for (int n = 1; n <= 8; ++n) ok = ok && qh_system(n) == membership_system(n + 1);
  return {"quantum cohomology words reproduce the membership system for n <= 8", ok, ""};
}

CheckResult derivation_matches() {
  bool ok = true;
  for (int n = 1; n <= 8; ++n) ok = ok && derive_surjectivity_from_membership(n) == surjectivity_system(n);
  return {"substitution derivation reproduces the surjectivity system for n <= 8", ok, ""};
}

CheckResult unique_two_class_solution() {
  int hits = 0;
  bool only_half = true;
  for_each_grid_tuple(2, 24, [&](const std::vector<Angle>& t) {
    if (is_surjective(t).surjective) {
      ++hits;
      only_half = only_half && t[0] == Angle(1, 2) && t[1] == Angle(1, 2);
    }
  });
  return {"two classes cover SU(2) only at (pi/2, pi/2)", hits == 1 && only_half,
          std::to_string(hits) + " surjective pairs on the pi/24 grid"};
}

CheckResult even_n_discrepancy() {
  const std::vector<Angle> t{Angle(3, 4), Angle(1, 4)};
  const bool literal = is_surjective(t, QuantifierRange::paper_literal).surjective;
  const bool corrected = is_surjective(t).surjective;
  const AngleInterval r = reachable(t);
  const bool ok = literal && !corrected && r == AngleInterval(Angle(1, 2), Angle::pi());
  return {"(3pi/4, pi/4): j < n/2 range accepts, corrected range and reachable interval reject", ok,
          "reachable " + r.to_string()};
}

CheckResult monte_carlo(std::uint64_t seed) {
  const std::vector<Angle> t{Angle(3, 4), Angle(1, 4)};
  const SampleReport r = empirical_reachable(t, 20000, seed);
  const bool ok = r.containment_ok && r.endpoint_gap_lo < 0.05 && r.endpoint_gap_hi < 0.05;
  return {"sampled products of C(3pi/4)C(pi/4) stay inside and fill [pi/2, pi]", ok,
          "gaps " + std::to_string(r.endpoint_gap_lo) + ", " + std::to_string(r.endpoint_gap_hi)};
}

}  // namespace

std::vector<CheckResult> run_selfcheck(std::uint64_t seed) {
  return {three_class_table(),     routes_agree(seed),  system_sizes(),       qh_matches_membership(),
          derivation_matches(),    unique_two_class_solution(), even_n_discrepancy(), monte_carlo(seed)};
}

}  // namespace classprod
