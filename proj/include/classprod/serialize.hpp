#pragma once

// JSON schemas:
//   Angle / ScaledValue   {"num": p, "den": q}           (value (p/q)*pi)
//   AngleInterval         {"lo": Angle, "hi": Angle}
//   InequalitySystem      {"n": N, "ineqs": [{"signs": [1,-1,...], "bound": ScaledValue}]}
//   surjectivity system   {"n": n, "ineqs": [{"signs": [...], "lower": ScaledValue, "upper": ScaledValue}]}
//   QHClass               {"d": d, "k": k}
//   SampleReport          every field; radians as doubles
//
// Integers that do not fit in 64 bits are written as decimal strings; the
// readers accept either form.

#include <nlohmann/json.hpp>

#include "classprod/angles.hpp"
#include "classprod/membership.hpp"
#include "classprod/qh_cp1.hpp"
#include "classprod/sampling.hpp"
#include "classprod/surjectivity.hpp"

namespace classprod {

using json = nlohmann::ordered_json;

json to_json(const ScaledValue& v);
json to_json(const Angle& a);
json to_json(const AngleInterval& i);
json to_json(const SignedInequality& q);
json to_json(const InequalitySystem& s);
json to_json(const TwoSidedInequality& q);
json to_json(int n, const std::vector<TwoSidedInequality>& system);
json to_json(const QHClass& c);
json to_json(const SampleReport& r);

// Readers throw SyntaxError on schema mismatch and RangeError on invalid values.
ScaledValue scaled_value_from_json(const json& j);
Angle angle_from_json(const json& j);
AngleInterval interval_from_json(const json& j);
SignedInequality inequality_from_json(const json& j);
InequalitySystem system_from_json(const json& j);
TwoSidedInequality two_sided_from_json(const json& j);
std::vector<TwoSidedInequality> surjectivity_system_from_json(const json& j);
QHClass qh_class_from_json(const json& j);
SampleReport sample_report_from_json(const json& j);

}  // namespace classprod
