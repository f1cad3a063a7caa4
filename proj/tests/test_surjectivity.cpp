#include <doctest.h>

#include <algorithm>

#include "classprod/surjectivity.hpp"
#include "test_support.hpp"

using namespace classprod;
using classprod::testing::for_each_grid_tuple;
using classprod::testing::random_tuple;

namespace {

TwoSidedInequality two_sided(const char* signs, int lower, int upper) {
  return {SignPattern::parse(signs), ScaledValue::multiple_of_pi(lower), ScaledValue::multiple_of_pi(upper)};
}

}  // namespace

TEST_CASE("surjectivity_system for two classes") {
  const auto s = surjectivity_system(2);
  CHECK(s == std::vector<TwoSidedInequality>{two_sided("++", 1, 1), two_sided("+-", 0, 0)});
  CHECK(surjectivity_system(2, QuantifierRange::paper_literal) ==
        std::vector<TwoSidedInequality>{two_sided("++", 1, 1)});
}

TEST_CASE("surjectivity_system for three classes") {
  const auto s = surjectivity_system(3);
  CHECK(s == std::vector<TwoSidedInequality>{two_sided("+++", 1, 2), two_sided("++-", 0, 1),
                                             two_sided("+-+", 0, 1), two_sided("-++", 0, 1)});
  // Odd n: the literal range loses nothing.
  CHECK(surjectivity_system(3, QuantifierRange::paper_literal) == s);
}

TEST_CASE("surjectivity_system for one class is infeasible") {
  const auto s = surjectivity_system(1);
  CHECK(s == std::vector<TwoSidedInequality>{two_sided("+", 1, 0)});
  for (int k = 0; k <= 12; ++k) CHECK_FALSE(is_surjective(std::vector<Angle>{Angle(k, 12)}).surjective);
}

TEST_CASE("surjectivity_system structure") {
  for (int n = 1; n <= 14; ++n) {
    const auto s = surjectivity_system(n);
    CHECK(s.size() == (std::size_t{1} << (n - 1)));
    CHECK(std::is_sorted(s.begin(), s.end()));
    for (const auto& q : s) {
      const int j = q.signs.minus_count();
      CHECK(2 * j <= n);
      CHECK(is_canonical(q.signs));
      CHECK(q.lower == ScaledValue::multiple_of_pi(-(j - 1)));
      CHECK(q.upper == ScaledValue::multiple_of_pi(n - j - 1));
      if (n >= 2) CHECK(q.lower <= q.upper);
    }
  }
  CHECK_THROWS_AS(surjectivity_system(0), ContractError);
  CHECK_THROWS_AS(surjectivity_system(21), ResourceError);
}

TEST_CASE("canonical patterns") {
  CHECK(is_canonical(SignPattern::parse("++-")));
  CHECK_FALSE(is_canonical(SignPattern::parse("+--")));
  CHECK(is_canonical(SignPattern::parse("+-")));
  CHECK_FALSE(is_canonical(SignPattern::parse("-+")));
  CHECK(canonical(SignPattern::parse("-+")) == SignPattern::parse("+-"));
  CHECK(canonical(SignPattern::parse("--+-")) == SignPattern::parse("++-+"));
}

TEST_CASE("is_surjective examples") {
  const std::vector<Angle> halves{Angle(1, 2), Angle(1, 2)};
  CHECK(is_surjective(halves).surjective);
  CHECK(is_surjective(std::vector<Angle>{Angle(1, 2), Angle(1, 2), Angle(0), Angle(0)}).surjective);

  const std::vector<Angle> skew{Angle(3, 4), Angle(1, 4)};
  const SurjectivityDecision d = is_surjective(skew);
  CHECK_FALSE(d.surjective);
  CHECK(d.violated == std::vector<TwoSidedInequality>{two_sided("+-", 0, 0)});

  const SurjectivityDecision thirds = is_surjective(std::vector<Angle>{Angle(1, 3), Angle(1, 3)});
  CHECK_FALSE(thirds.surjective);
  CHECK(thirds.violated == std::vector<TwoSidedInequality>{two_sided("++", 1, 1)});
}

TEST_CASE("paper-literal range accepts (3pi/4, pi/4); the reachable interval says otherwise") {
  const std::vector<Angle> skew{Angle(3, 4), Angle(1, 4)};
  CHECK(is_surjective(skew, QuantifierRange::paper_literal).surjective);
  CHECK_FALSE(is_surjective(skew).surjective);
  CHECK_FALSE(is_surjective_by_interval(skew));
  CHECK(reachable(skew) == AngleInterval(Angle(1, 2), Angle::pi()));
}

TEST_CASE("literal and corrected predicates: agree for odd n, differ for even n only via j = n/2") {
  std::mt19937_64 rng(41);
  int even_differences = 0;
  for (int trial = 0; trial < 3000; ++trial) {
    const int n = std::uniform_int_distribution<int>(1, 8)(rng);
    const auto t = random_tuple(rng, n, 8);
    const bool literal = is_surjective(t, QuantifierRange::paper_literal).surjective;
    const SurjectivityDecision corrected = is_surjective(t);
    if (n % 2 == 1) {
      CHECK(literal == corrected.surjective);
    } else if (literal != corrected.surjective) {
      ++even_differences;
      CHECK(literal);
      for (const auto& q : corrected.violated) CHECK(2 * q.signs.minus_count() == n);
    }
  }
  CHECK(even_differences > 0);
}

TEST_CASE("derive_surjectivity_from_membership examples") {
  CHECK(derive_surjectivity_from_membership(1) == std::vector<TwoSidedInequality>{two_sided("+", 1, 0)});
  CHECK(derive_surjectivity_from_membership(2) == surjectivity_system(2));
  const auto three = derive_surjectivity_from_membership(3);
  CHECK(three.size() == 4);
  CHECK(three == surjectivity_system(3));
  CHECK_THROWS_AS(derive_surjectivity_from_membership(20), ResourceError);
  CHECK(derive_surjectivity_from_membership(20, 21).size() == (std::size_t{1} << 19));
}

TEST_CASE("derivation equals the surjectivity system for 2 <= n <= 12") {
  for (int n = 2; n <= 12; ++n) CHECK(derive_surjectivity_from_membership(n) == surjectivity_system(n));
}

TEST_CASE("Pascal bookkeeping of the derivation") {
  // Each pair of membership families over n+1 angles (minus counts 2j+1 and n-2j)
  // turns into two families of two-sided inequalities over n angles.
  for (int n = 1; n <= 20; ++n)
    for (int j = 0; 2 * j < n; ++j)
      CHECK(binomial(n + 1, 2 * j + 1) + binomial(n + 1, n - 2 * j) ==
            2 * (binomial(n, 2 * j + 1) + binomial(n, 2 * j)));
  CHECK(binomial(20, 10) == 184756);
  CHECK(binomial(5, 7) == 0);
}

TEST_CASE("property: inequality route agrees with the reachable interval, permutation invariant") {
  for (int n = 1; n <= 4; ++n)
    for_each_grid_tuple(n, 6, [](const std::vector<Angle>& t) {
      CHECK(is_surjective(t).surjective == is_surjective_by_interval(t));
    });

  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 500; ++trial) {
    auto t = random_tuple(rng, std::uniform_int_distribution<int>(1, 10)(rng), 12);
    const bool by_ineq = is_surjective(t).surjective;
    CHECK(by_ineq == is_surjective_by_interval(t));
    std::shuffle(t.begin(), t.end(), rng);
    CHECK(is_surjective(t).surjective == by_ineq);
  }
}

TEST_CASE("violations are exactly the failing two-sided inequalities") {
  std::mt19937_64 rng(47);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = std::uniform_int_distribution<int>(1, 7)(rng);
    const auto t = random_tuple(rng, n, 10);
    std::vector<TwoSidedInequality> failing;
    for (const auto& q : surjectivity_system(n))
      if (!q.holds(t)) failing.push_back(q);
    CHECK(is_surjective(t).violated == failing);
  }
}

TEST_CASE("human-readable two-sided inequality") {
  CHECK(two_sided("+-", 0, 0).to_string() == "0 ≤ +λ1 −λ2 ≤ 0");
  CHECK(two_sided("+++", 1, 2).to_string() == "π ≤ +λ1 +λ2 +λ3 ≤ 2π");
}
