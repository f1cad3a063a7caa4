#include <doctest.h>

#include <set>

#include "classprod/qh_cp1.hpp"

using namespace classprod;

namespace {

std::vector<QHClass> small_classes() {
  std::vector<QHClass> out;
  for (int d = 0; d <= 8; ++d)
    for (int k = 1; k <= 2; ++k) out.emplace_back(d, k);
  return out;
}

}  // namespace

TEST_CASE("qh_mul examples") {
  CHECK(qh_mul(QHClass::sigma1(), QHClass::sigma1()) == QHClass(1, 2));
  for (const QHClass& x : small_classes()) {
    CHECK(qh_mul(QHClass::unit(), x) == x);
    CHECK(qh_mul(x, QHClass::unit()) == x);
  }
  CHECK(qh_mul(QHClass(1, 1), QHClass::sigma1()) == QHClass(2, 2));
  CHECK(qh_mul(QHClass::q(), QHClass::sigma1()) == QHClass(1, 1));
}

TEST_CASE("invalid classes and words") {
  CHECK_THROWS_AS(QHClass(-1, 2), ContractError);
  CHECK_THROWS_AS(QHClass(0, 3), ContractError);
  CHECK_THROWS_AS(SchubertWord({}), ContractError);
  CHECK_THROWS_AS(SchubertWord({1, 0}), ContractError);
}

TEST_CASE("ring laws and degree bookkeeping, exhaustive for d <= 8") {
  const auto classes = small_classes();
  for (const auto& x : classes)
    for (const auto& y : classes) {
      CHECK(qh_mul(x, y) == qh_mul(y, x));
      CHECK(qh_mul(x, y).degree() == x.degree() + y.degree());
      for (const auto& z : classes) CHECK(qh_mul(qh_mul(x, y), z) == qh_mul(x, qh_mul(y, z)));
    }
  CHECK(QHClass::q().degree() == 4);
  CHECK(QHClass::sigma1().degree() == 2);
}

TEST_CASE("qh_word_product examples and agreement with a left fold") {
  CHECK(qh_word_product(SchubertWord({1, 1})) == QHClass(1, 2));
  CHECK(qh_word_product(SchubertWord({2, 2, 2})) == QHClass(0, 2));
  CHECK(qh_word_product(SchubertWord({1, 1, 1})) == QHClass(1, 1));

  for (int n = 1; n <= 10; ++n)
    for (std::uint64_t mask = 0; mask < (1ULL << n); ++mask) {
      const SchubertWord w = SchubertWord::from_mask(n, mask);
      QHClass acc = QHClass::unit();
      for (int i : w.letters()) acc = qh_mul(acc, i == 1 ? QHClass::sigma1() : QHClass::unit());
      CHECK(qh_word_product(w) == acc);
    }
}

TEST_CASE("qh_inequality examples") {
  const SignedInequality a = qh_inequality(SchubertWord({2, 2}));
  CHECK(a.signs == SignPattern::parse("--+"));
  CHECK(a.bound == ScaledValue::multiple_of_pi(0));

  const SignedInequality b = qh_inequality(SchubertWord({1, 1}));
  CHECK(b.signs == SignPattern::parse("+++"));
  CHECK(b.bound == ScaledValue::multiple_of_pi(2));

  const SignedInequality c = qh_inequality(SchubertWord({1, 2}));
  CHECK(c.signs == SignPattern::parse("+--"));
  CHECK(c.bound == ScaledValue::multiple_of_pi(0));
}

TEST_CASE("qh_system examples") {
  CHECK(qh_system(2) == membership_system(3));
  CHECK(qh_system(3) == membership_system(4));
  const InequalitySystem one = qh_system(1);
  CHECK(one.count_angles == 2);
  CHECK(one.inequalities == std::vector<SignedInequality>{{SignPattern::parse("+-"), ScaledValue::multiple_of_pi(0)},
                                                          {SignPattern::parse("-+"), ScaledValue::multiple_of_pi(0)}});
  CHECK_THROWS_AS(qh_system(0), ContractError);
  CHECK_THROWS_AS(qh_system(21), ResourceError);
}

TEST_CASE("2^n words give 2^n distinct inequalities equal to the membership system") {
  for (int n = 1; n <= 12; ++n) {
    std::set<SignedInequality> distinct;
    for (std::uint64_t mask = 0; mask < (1ULL << n); ++mask)
      distinct.insert(qh_inequality(SchubertWord::from_mask(n, mask)));
    CHECK(distinct.size() == (std::size_t{1} << n));
    CHECK(qh_system(n) == membership_system(n + 1));
  }
}
