#include "classprod/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "classprod/qh_cp1.hpp"
#include "classprod/sampling.hpp"
#include "classprod/selfcheck.hpp"
#include "classprod/serialize.hpp"
#include "classprod/surjectivity.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace classprod::cli {
namespace {

struct CommonOptions {
  bool text = false;
  bool json = false;
  bool radians = false;
  std::int64_t max_den = 1'000'000;
  int cap = kDefaultCap;
};

enum class RouteChoice { inequalities, interval };

void add_common(CLI::App* sub, CommonOptions& o) {
  auto* fmt = sub->add_option_group("format");
  fmt->add_flag("--json", o.json, "JSON output (default)");
  fmt->add_flag("--text", o.text, "human-readable output");
  fmt->require_option(0, 1);
  sub->add_flag("--radians", o.radians, "read angles as decimal radians, snapped to rational multiples of pi");
  sub->add_option("--max-den", o.max_den, "largest denominator used when snapping radians")
      ->check(CLI::Range(std::int64_t{1}, std::int64_t{1'000'000'000'000}));
  sub->add_option("--cap", o.cap, "largest angle count for the exponential inequality routes")
      ->check(CLI::Range(1, kMaxCap));
}

void add_route(CLI::App* sub, RouteChoice& route) {
  sub->add_option("--route", route, "inequalities (capped, lists violations) or interval (uncapped)")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, RouteChoice>{{"inequalities", RouteChoice::inequalities},
                                             {"interval", RouteChoice::interval}},
          CLI::ignore_case));
}

std::vector<Angle> parse_angles(const std::vector<std::string>& texts, const CommonOptions& o, std::ostream& err) {
  AngleParseOptions po;
  po.max_denominator = o.max_den;
  po.radians = o.radians;
  std::vector<Angle> out;
  out.reserve(texts.size());
  for (const auto& t : texts) {
    ParsedAngle p = parse_angle(t, po);
    if (p.approximate)
      err << "note: '" << t << "' snapped to (" << p.angle.to_string() << ")π = " << p.angle.radians()
          << " rad\n";
    out.push_back(std::move(p.angle));
  }
  return out;
}

std::string pi_text(const Angle& a) { return format_pi_multiple(a.scaled()); }

std::string interval_text(const AngleInterval& i) { return "[" + pi_text(i.lo()) + ", " + pi_text(i.hi()) + "]"; }

std::uint64_t default_seed() {
  if (const char* env = std::getenv(kSeedEnv)) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw ContractError(std::string(kSeedEnv) + " is not an unsigned integer");
    }
  }
  return 42;
}

void emit(std::ostream& out, const json& j) { out << j.dump() << '\n'; }

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Decide when products of SU(2) conjugacy classes contain the identity or cover SU(2).\n"
               "Angles are rational multiples of pi: \"1/2\" means pi/2.",
               "classprod"};
  app.require_subcommand(1);

  CommonOptions common;
  std::vector<std::string> angle_texts;
  RouteChoice route = RouteChoice::inequalities;
  bool paper_literal = false;
  int n = 0;
  std::string kind = "membership";
  std::int64_t samples = 100'000;
  std::optional<std::uint64_t> seed;
  int threads = 0;
  bool serial = false;
  std::function<int()> action;

  auto add_angles = [&](CLI::App* sub) {
    sub->add_option("angles", angle_texts, "class angles as p/q (multiples of pi)")->required();
  };

  auto* identity = app.add_subcommand("identity", "does C(l1)...C(lN) contain the identity?");
  add_angles(identity);
  add_common(identity, common);
  add_route(identity, route);

  auto* reach = app.add_subcommand("reachable", "class angles attained by C(l1)...C(lN)");
  add_angles(reach);
  add_common(reach, common);

  auto* surj = app.add_subcommand("surjective", "is C(l1)...C(ln) all of SU(2)?");
  add_angles(surj);
  add_common(surj, common);
  add_route(surj, route);
  surj->add_flag("--paper-literal", paper_literal, "use only minus counts j < n/2 (incomplete for even n)");

  auto* ineqs = app.add_subcommand("inequalities", "print an inequality system");
  ineqs->add_option("--n", n, "number of angles")->required();
  ineqs->add_option("--kind", kind, "membership or surjectivity")
      ->check(CLI::IsMember({"membership", "surjectivity"}));
  ineqs->add_flag("--paper-literal", paper_literal, "surjectivity only: j < n/2");
  add_common(ineqs, common);

  auto* derive = app.add_subcommand("derive", "derive the surjectivity system from the membership system");
  derive->add_option("--n", n, "number of classes")->required();
  add_common(derive, common);

  auto* qh = app.add_subcommand("qh", "membership inequalities from quantum cohomology of CP^1");
  qh->add_option("--n", n, "word length (system over n+1 angles)")->required();
  add_common(qh, common);

  auto* mc = app.add_subcommand("mc", "Monte Carlo check of the reachable interval");
  add_angles(mc);
  add_common(mc, common);
  mc->add_option("--samples", samples, "number of sampled products")->check(CLI::PositiveNumber);
  mc->add_option("--seed", seed, std::string("RNG seed (default $") + kSeedEnv + " or 42)");
  mc->add_option("--threads", threads, "OpenMP threads (0 = runtime default)")->check(CLI::NonNegativeNumber);
  mc->add_flag("--serial", serial, "use the serial reference kernel");

  auto* self = app.add_subcommand("selfcheck", "cross-validate all routes at reduced scale");
  self->add_option("--seed", seed, "seed for the randomized checks");
  add_common(self, common);

  identity->callback([&] {
    action = [&] {
      const auto angles = parse_angles(angle_texts, common, err);
      if (route == RouteChoice::interval) {
        const bool yes = contains_identity_by_interval(angles);
        if (common.text) out << "identity " << (yes ? "is" : "is not") << " in the product (interval route)\n";
        else emit(out, {{"n", angles.size()}, {"route", "interval"}, {"contains_identity", yes}});
        return yes ? kExitTrue : kExitFalse;
      }
      const MembershipDecision d = contains_identity(angles, common.cap);
      const bool by_interval = contains_identity_by_interval(angles);
      if (common.text) {
        out << "identity " << (d.contains_identity ? "is" : "is not") << " in the product\n";
        for (const auto& q : d.violated) out << "violated: " << q.to_string() << '\n';
      } else {
        json v = json::array();
        for (const auto& q : d.violated) v.push_back(to_json(q));
        emit(out, {{"n", angles.size()},
                   {"route", "inequalities"},
                   {"contains_identity", d.contains_identity},
                   {"violated", std::move(v)},
                   {"interval_route_agrees", by_interval == d.contains_identity}});
      }
      return d.contains_identity ? kExitTrue : kExitFalse;
    };
  });

  reach->callback([&] {
    action = [&] {
      const auto angles = parse_angles(angle_texts, common, err);
      const AngleInterval r = reachable(angles);
      if (common.text) out << interval_text(r) << '\n';
      else emit(out, to_json(r));
      return kExitTrue;
    };
  });

  surj->callback([&] {
    action = [&] {
      const auto angles = parse_angles(angle_texts, common, err);
      const AngleInterval r = reachable(angles);
      if (route == RouteChoice::interval) {
        if (paper_literal) throw ContractError("--paper-literal only applies to the inequality route");
        const bool yes = r.is_full();
        if (common.text) out << (yes ? "surjective" : "not surjective") << " (reachable " << interval_text(r) << ")\n";
        else emit(out, {{"surjective", yes}, {"route", "interval"}, {"reachable", to_json(r)}});
        return yes ? kExitTrue : kExitFalse;
      }
      const auto range = paper_literal ? QuantifierRange::paper_literal : QuantifierRange::corrected;
      const SurjectivityDecision d = is_surjective(angles, range, common.cap);
      if (common.text) {
        out << (d.surjective ? "surjective" : "not surjective") << (paper_literal ? " (j < n/2 only)" : "") << '\n';
        for (const auto& q : d.violated) out << "violated: " << q.to_string() << '\n';
        out << "reachable " << interval_text(r) << '\n';
      } else {
        json v = json::array();
        for (const auto& q : d.violated) v.push_back(to_json(q));
        emit(out, {{"surjective", d.surjective},
                   {"route", "inequalities"},
                   {"range", paper_literal ? "paper-literal" : "corrected"},
                   {"violated", std::move(v)},
                   {"reachable", to_json(r)}});
      }
      return d.surjective ? kExitTrue : kExitFalse;
    };
  });

  ineqs->callback([&] {
    action = [&] {
      if (kind == "membership") {
        if (paper_literal) throw ContractError("--paper-literal only applies to --kind surjectivity");
        const InequalitySystem s = membership_system(n, common.cap);
        if (common.text)
          for (const auto& q : s.inequalities) out << q.to_string() << '\n';
        else emit(out, to_json(s));
      } else {
        const auto s = surjectivity_system(
            n, paper_literal ? QuantifierRange::paper_literal : QuantifierRange::corrected, common.cap);
        if (common.text)
          for (const auto& q : s) out << q.to_string() << '\n';
        else emit(out, to_json(n, s));
      }
      return kExitTrue;
    };
  });

  derive->callback([&] {
    action = [&] {
      const auto derived = derive_surjectivity_from_membership(n, common.cap);
      const bool equal = derived == surjectivity_system(n, QuantifierRange::corrected, common.cap);
      if (common.text) {
        for (const auto& q : derived) out << q.to_string() << '\n';
        out << (equal ? "equals" : "DIFFERS FROM") << " the surjectivity system\n";
      } else {
        emit(out, {{"n", n}, {"derived", to_json(n, derived)}, {"equals_surjectivity_system", equal}});
      }
      return equal ? kExitTrue : kExitFalse;
    };
  });

  qh->callback([&] {
    action = [&] {
      const InequalitySystem s = qh_system(n, common.cap);
      const bool equal = s == membership_system(n + 1, kMaxCap);
      const std::uint64_t words = 1ULL << n;
      if (common.text) {
        for (std::uint64_t m = 0; m < words; ++m) {
          const SchubertWord w = SchubertWord::from_mask(n, m);
          const QHClass p = qh_word_product(w);
          std::string letters;
          for (int i : w.letters()) letters += std::to_string(i);
          out << letters << "  q^" << p.d() << " σ" << p.k() << "  " << qh_inequality(w).to_string() << '\n';
        }
        out << (equal ? "equals" : "DIFFERS FROM") << " the membership system\n";
      } else {
        json list = json::array();
        for (std::uint64_t m = 0; m < words; ++m) {
          const SchubertWord w = SchubertWord::from_mask(n, m);
          list.push_back({{"word", w.letters()},
                          {"product", to_json(qh_word_product(w))},
                          {"inequality", to_json(qh_inequality(w))}});
        }
        emit(out, {{"n", n}, {"words", std::move(list)}, {"system", to_json(s)}, {"equals_membership_system", equal}});
      }
      return equal ? kExitTrue : kExitFalse;
    };
  });

  mc->callback([&] {
    action = [&] {
      const auto angles = parse_angles(angle_texts, common, err);
#ifdef _OPENMP
      if (threads > 0) omp_set_num_threads(threads);
#endif
      const SampleReport r = empirical_reachable(angles, samples, seed.value_or(default_seed()),
                                                 serial ? Execution::serial : Execution::parallel);
      if (common.text) {
        out << "sampled [" << r.empirical_lo << ", " << r.empirical_hi << "] rad over " << r.n_samples
            << " products (seed " << r.seed << ")\n"
            << "predicted [" << r.predicted_lo << ", " << r.predicted_hi << "] rad\n"
            << "containment " << (r.containment_ok ? "ok" : "FAILED") << ", endpoint gaps " << r.endpoint_gap_lo
            << " / " << r.endpoint_gap_hi << " rad\n";
      } else {
        emit(out, to_json(r));
      }
      return r.containment_ok ? kExitTrue : kExitFalse;
    };
  });

  self->callback([&] {
    action = [&] {
      const auto results = run_selfcheck(seed.value_or(default_seed()));
      const bool all = std::all_of(results.begin(), results.end(), [](const CheckResult& c) { return c.passed; });
      if (common.text) {
        for (const auto& c : results)
          out << (c.passed ? "PASS " : "FAIL ") << c.name << (c.detail.empty() ? "" : " (" + c.detail + ")") << '\n';
      } else {
        json list = json::array();
        for (const auto& c : results) list.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
        emit(out, {{"checks", std::move(list)}, {"passed", all}});
      }
      return all ? kExitTrue : kExitFalse;
    };
  });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitTrue : kExitUsage;
  }

  try {
    return action ? action() : kExitUsage;
  } catch (const ContractError& e) {
    err << "error: " << e.what() << '\n';
  } catch (const RangeError& e) {
    err << "error: " << e.what() << '\n';
  } catch (const SyntaxError& e) {
    err << "error: " << e.what() << '\n';
  } catch (const ResourceError& e) {
    err << "error: " << e.what() << '\n';
  }
  return kExitUsage;
}

}  // namespace classprod::cli
