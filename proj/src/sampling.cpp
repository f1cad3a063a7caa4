#include "classprod/sampling.hpp"

#include <algorithm>
#include <limits>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "classprod/membership.hpp"
#include "classprod/surjectivity.hpp"

namespace classprod {
namespace {

struct Extremes {
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();
};

Extremes sample_chunk(std::span<const double> radians, std::uint64_t seed, std::int64_t chunk,
                      std::int64_t count) {
  StreamRng rng(seed, static_cast<std::uint64_t>(chunk));
  Extremes e;
  for (std::int64_t s = 0; s < count; ++s) {
    const double l = sample_product_angle(radians, rng);
    e.lo = std::min(e.lo, l);
    e.hi = std::max(e.hi, l);
  }
  return e;
}

void validate_batch(std::span<const std::vector<Angle>> tuples, Route route, int cap) {
  for (const auto& t : tuples) {
    if (t.empty()) throw ContractError("empty tuple in batch");
    if (route == Route::inequalities) check_cap(static_cast<int>(t.size()), cap, "angle count");
  }
}

template <class Predicate>
std::vector<std::uint8_t> classify(std::span<const std::vector<Angle>> tuples, Execution exec, Predicate pred) {
  const auto n = static_cast<std::int64_t>(tuples.size());
  std::vector<std::uint8_t> out(tuples.size(), 0);
  if (exec == Execution::serial) {
    for (std::int64_t i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = pred(tuples[static_cast<std::size_t>(i)]);
    return out;
  }
#pragma omp parallel for schedule(dynamic, 64)
  for (std::int64_t i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = pred(tuples[static_cast<std::size_t>(i)]);
  return out;
}

}  // namespace

int parallel_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

double sample_product_angle(std::span<const double> radians, StreamRng& rng) {
  SU2Element g = class_sample(radians.front(), rng);
  for (double l : radians.subspan(1)) g = g * class_sample(l, rng);
  return class_angle(g);
}

SampleReport empirical_reachable(std::span<const Angle> angles, std::int64_t n_samples, std::uint64_t seed,
                                 Execution exec) {
  if (angles.empty()) throw ContractError("empirical_reachable needs at least one angle");
  if (n_samples < 1) throw ContractError("n_samples must be at least 1");

  std::vector<double> radians;
  radians.reserve(angles.size());
  for (const Angle& a : angles) radians.push_back(a.radians());
  const AngleInterval predicted = reachable(angles);

  const std::int64_t chunks = (n_samples + kSampleChunk - 1) / kSampleChunk;
  auto chunk_size = [&](std::int64_t c) { return std::min(kSampleChunk, n_samples - c * kSampleChunk); };

  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();
  if (exec == Execution::serial) {
    for (std::int64_t c = 0; c < chunks; ++c) {
      const Extremes e = sample_chunk(radians, seed, c, chunk_size(c));
      lo = std::min(lo, e.lo);
      hi = std::max(hi, e.hi);
    }
  } else {
#pragma omp parallel for schedule(static) reduction(min : lo) reduction(max : hi)
    for (std::int64_t c = 0; c < chunks; ++c) {
      const Extremes e = sample_chunk(radians, seed, c, chunk_size(c));
      lo = std::min(lo, e.lo);
      hi = std::max(hi, e.hi);
    }
  }

  SampleReport r;
  r.n_samples = n_samples;
  r.seed = seed;
  r.empirical_lo = lo;
  r.empirical_hi = hi;
  r.predicted_lo = predicted.lo().radians();
  r.predicted_hi = predicted.hi().radians();
  r.endpoint_gap_lo = lo - r.predicted_lo;
  r.endpoint_gap_hi = r.predicted_hi - hi;
  r.containment_ok = lo >= r.predicted_lo - kContainmentSlack && hi <= r.predicted_hi + kContainmentSlack;
  return r;
}

std::vector<std::uint8_t> classify_identity(std::span<const std::vector<Angle>> tuples, Route route, Execution exec,
                                            int cap) {
  validate_batch(tuples, route, cap);
  if (route == Route::inequalities)
    return classify(tuples, exec, [cap](const std::vector<Angle>& t) -> std::uint8_t {
      return satisfies_membership_system(t, cap);
    });
  return classify(tuples, exec,
                  [](const std::vector<Angle>& t) -> std::uint8_t { return contains_identity_by_interval(t); });
}

std::vector<std::uint8_t> classify_surjective(std::span<const std::vector<Angle>> tuples, Route route, Execution exec,
                                              int cap) {
  validate_batch(tuples, route, cap);
  if (route == Route::inequalities)
    return classify(tuples, exec, [cap](const std::vector<Angle>& t) -> std::uint8_t {
      return is_surjective(t, QuantifierRange::corrected, cap).surjective;
    });
  return classify(tuples, exec,
                  [](const std::vector<Angle>& t) -> std::uint8_t { return is_surjective_by_interval(t); });
}

}  // namespace classprod
