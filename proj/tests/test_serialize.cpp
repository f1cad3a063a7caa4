#include <doctest.h>

#include "classprod/serialize.hpp"
#include "test_support.hpp"

using namespace classprod;

TEST_CASE("documented JSON shapes") {
  CHECK(to_json(Angle(1, 2)).dump() == R"({"num":1,"den":2})");
  CHECK(to_json(AngleInterval(Angle(1, 2), Angle::pi())).dump() ==
        R"({"lo":{"num":1,"den":2},"hi":{"num":1,"den":1}})");
  CHECK(to_json(membership_system(2)).dump() ==
        R"({"n":2,"ineqs":[{"signs":[1,-1],"bound":{"num":0,"den":1}},{"signs":[-1,1],"bound":{"num":0,"den":1}}]})");
  CHECK(to_json(2, surjectivity_system(2)).dump() ==
        R"({"n":2,"ineqs":[{"signs":[1,1],"lower":{"num":1,"den":1},"upper":{"num":1,"den":1}},)"
        R"({"signs":[1,-1],"lower":{"num":0,"den":1},"upper":{"num":0,"den":1}}]})");
  CHECK(to_json(QHClass(1, 2)).dump() == R"({"d":1,"k":2})");
}

TEST_CASE("big integers are written as strings and read back") {
  const Angle a(1, BigInt("100000000000000000000000000001"));
  const json j = to_json(a);
  CHECK(j["den"].is_string());
  CHECK(angle_from_json(j) == a);
}

TEST_CASE("property: systems and intervals round-trip") {
  for (int n = 1; n <= 8; ++n) {
    const InequalitySystem m = membership_system(n);
    CHECK(system_from_json(json::parse(to_json(m).dump())) == m);
    const auto s = surjectivity_system(n);
    CHECK(surjectivity_system_from_json(json::parse(to_json(n, s).dump())) == s);
  }
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    const auto t = classprod::testing::random_tuple(rng, std::uniform_int_distribution<int>(1, 6)(rng), 97);
    const AngleInterval r = reachable(t);
    CHECK(interval_from_json(json::parse(to_json(r).dump())) == r);
  }
}

TEST_CASE("sample reports round-trip bit-exactly") {
  const SampleReport r = empirical_reachable(std::vector<Angle>{Angle(1, 3), Angle(2, 5)}, 3000, 77);
  CHECK(sample_report_from_json(json::parse(to_json(r).dump())) == r);
}

TEST_CASE("readers reject malformed input") {
  CHECK_THROWS_AS(angle_from_json(json::parse(R"({"num":1})")), SyntaxError);
  CHECK_THROWS_AS(angle_from_json(json::parse(R"({"num":3,"den":2})")), RangeError);
  CHECK_THROWS_AS(angle_from_json(json::parse(R"({"num":1,"den":0})")), SyntaxError);
  CHECK_THROWS_AS(angle_from_json(json::parse(R"({"num":"x","den":2})")), SyntaxError);
  CHECK_THROWS_AS(system_from_json(json::parse(R"({"n":2,"ineqs":[{"signs":[1,0],"bound":{"num":0,"den":1}}]})")),
                  SyntaxError);
  CHECK_THROWS_AS(system_from_json(json::parse(R"({"n":3,"ineqs":[{"signs":[1,1],"bound":{"num":0,"den":1}}]})")),
                  SyntaxError);
  CHECK_THROWS_AS(qh_class_from_json(json::parse(R"({"d":0,"k":3})")), RangeError);
}
