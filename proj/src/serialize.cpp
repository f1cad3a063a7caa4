#include "classprod/serialize.hpp"

#include <limits>
#include <string>

namespace classprod {
namespace {

json big_to_json(const BigInt& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(v);
  return v.str();
}

BigInt big_from_json(const json& j, const char* field) {
  if (j.is_number_integer()) return BigInt(j.get<std::int64_t>());
  if (j.is_string()) {
    const auto& s = j.get_ref<const std::string&>();
    try {
      return BigInt(s);
    } catch (const std::exception&) {
    }
  }
  throw SyntaxError(std::string("field '") + field + "' must be an integer");
}

const json& field(const json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) throw SyntaxError(std::string("missing field '") + name + "'");
  return j.at(name);
}

json signs_to_json(const SignPattern& p) { return p.to_signs(); }

SignPattern signs_from_json(const json& j) {
  if (!j.is_array()) throw SyntaxError("'signs' must be an array");
  std::vector<int> signs;
  for (const auto& s : j) {
    if (!s.is_number_integer()) throw SyntaxError("signs must be +1 or -1");
    signs.push_back(s.get<int>());
  }
  try {
    return SignPattern::from_signs(signs);
  } catch (const ContractError& e) {
    throw SyntaxError(e.what());
  }
}

int int_from_json(const json& j, const char* name) {
  const json& v = field(j, name);
  if (!v.is_number_integer()) throw SyntaxError(std::string("field '") + name + "' must be an integer");
  return v.get<int>();
}

double double_from_json(const json& j, const char* name) {
  const json& v = field(j, name);
  if (!v.is_number()) throw SyntaxError(std::string("field '") + name + "' must be a number");
  return v.get<double>();
}

}  // namespace

json to_json(const ScaledValue& v) { return {{"num", big_to_json(v.num())}, {"den", big_to_json(v.den())}}; }
json to_json(const Angle& a) { return {{"num", big_to_json(a.num())}, {"den", big_to_json(a.den())}}; }
json to_json(const AngleInterval& i) { return {{"lo", to_json(i.lo())}, {"hi", to_json(i.hi())}}; }

json to_json(const SignedInequality& q) { return {{"signs", signs_to_json(q.signs)}, {"bound", to_json(q.bound)}}; }

json to_json(const InequalitySystem& s) {
  json ineqs = json::array();
  for (const auto& q : s.inequalities) ineqs.push_back(to_json(q));
  return {{"n", s.count_angles}, {"ineqs", std::move(ineqs)}};
}

json to_json(const TwoSidedInequality& q) {
  return {{"signs", signs_to_json(q.signs)}, {"lower", to_json(q.lower)}, {"upper", to_json(q.upper)}};
}

json to_json(int n, const std::vector<TwoSidedInequality>& system) {
  json ineqs = json::array();
  for (const auto& q : system) ineqs.push_back(to_json(q));
  return {{"n", n}, {"ineqs", std::move(ineqs)}};
}

json to_json(const QHClass& c) { return {{"d", c.d()}, {"k", c.k()}}; }

json to_json(const SampleReport& r) {
  return {{"n_samples", r.n_samples},
          {"empirical_lo", r.empirical_lo},
          {"empirical_hi", r.empirical_hi},
          {"predicted", {{"lo", r.predicted_lo}, {"hi", r.predicted_hi}}},
          {"containment_ok", r.containment_ok},
          {"endpoint_gap_lo", r.endpoint_gap_lo},
          {"endpoint_gap_hi", r.endpoint_gap_hi},
          {"seed", r.seed}};
}

ScaledValue scaled_value_from_json(const json& j) {
  const BigInt den = big_from_json(field(j, "den"), "den");
  if (den <= 0) throw SyntaxError("'den' must be positive");
  return ScaledValue(big_from_json(field(j, "num"), "num"), den);
}

Angle angle_from_json(const json& j) { return Angle(scaled_value_from_json(j).coefficient()); }

AngleInterval interval_from_json(const json& j) {
  return AngleInterval(angle_from_json(field(j, "lo")), angle_from_json(field(j, "hi")));
}

SignedInequality inequality_from_json(const json& j) {
  return {signs_from_json(field(j, "signs")), scaled_value_from_json(field(j, "bound"))};
}

InequalitySystem system_from_json(const json& j) {
  InequalitySystem s;
  s.count_angles = int_from_json(j, "n");
  const json& ineqs = field(j, "ineqs");
  if (!ineqs.is_array()) throw SyntaxError("'ineqs' must be an array");
  for (const auto& q : ineqs) {
    s.inequalities.push_back(inequality_from_json(q));
    if (s.inequalities.back().signs.size() != s.count_angles) throw SyntaxError("sign pattern length differs from n");
  }
  return s;
}

TwoSidedInequality two_sided_from_json(const json& j) {
  return {signs_from_json(field(j, "signs")), scaled_value_from_json(field(j, "lower")),
          scaled_value_from_json(field(j, "upper"))};
}

std::vector<TwoSidedInequality> surjectivity_system_from_json(const json& j) {
  const int n = int_from_json(j, "n");
  const json& ineqs = field(j, "ineqs");
  if (!ineqs.is_array()) throw SyntaxError("'ineqs' must be an array");
  std::vector<TwoSidedInequality> out;
  for (const auto& q : ineqs) {
    out.push_back(two_sided_from_json(q));
    if (out.back().signs.size() != n) throw SyntaxError("sign pattern length differs from n");
  }
  return out;
}

QHClass qh_class_from_json(const json& j) {
  try {
    return QHClass(int_from_json(j, "d"), int_from_json(j, "k"));
  } catch (const ContractError& e) {
    throw RangeError(e.what());
  }
}

SampleReport sample_report_from_json(const json& j) {
  SampleReport r;
  const json& n = field(j, "n_samples");
  if (!n.is_number_integer()) throw SyntaxError("'n_samples' must be an integer");
  r.n_samples = n.get<std::int64_t>();
  r.empirical_lo = double_from_json(j, "empirical_lo");
  r.empirical_hi = double_from_json(j, "empirical_hi");
  const json& predicted = field(j, "predicted");
  r.predicted_lo = double_from_json(predicted, "lo");
  r.predicted_hi = double_from_json(predicted, "hi");
  const json& ok = field(j, "containment_ok");
  if (!ok.is_boolean()) throw SyntaxError("'containment_ok' must be a boolean");
  r.containment_ok = ok.get<bool>();
  r.endpoint_gap_lo = double_from_json(j, "endpoint_gap_lo");
  r.endpoint_gap_hi = double_from_json(j, "endpoint_gap_hi");
  const json& seed = field(j, "seed");
  if (!seed.is_number_unsigned() && !seed.is_number_integer()) throw SyntaxError("'seed' must be an integer");
  r.seed = seed.get<std::uint64_t>();
  return r;
}

}  // namespace classprod
