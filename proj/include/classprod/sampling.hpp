#pragma once

// Monte Carlo probe of the reachable set, and batch classification of many
// tuples. Each kernel has a serial reference and an OpenMP version; the two
// produce identical results for any thread count because work is cut into
// fixed chunks, chunk c always draws from RNG substream c, and the merge is a
// min/max (or per-index) reduction.

#include <cstdint>
#include <span>
#include <vector>

#include "classprod/membership.hpp"
#include "classprod/su2.hpp"

namespace classprod {

enum class Execution { serial, parallel };

/// Samples handled by one RNG substream.
inline constexpr std::int64_t kSampleChunk = 4096;
/// Slack allowed when comparing sampled angles with exact endpoints.
inline constexpr double kContainmentSlack = 1e-9;

struct SampleReport {
  std::int64_t n_samples = 0;
  double empirical_lo = 0.0;
  double empirical_hi = 0.0;
  double predicted_lo = 0.0;
  double predicted_hi = 0.0;
  bool containment_ok = false;
  /// empirical_lo - predicted_lo and predicted_hi - empirical_hi.
  double endpoint_gap_lo = 0.0;
  double endpoint_gap_hi = 0.0;
  std::uint64_t seed = 0;

  friend bool operator==(const SampleReport&, const SampleReport&) = default;
};

/// Samples g_1 ... g_n with g_i drawn from C(l_i) by Haar conjugation and
/// reports the extreme class angles against reachable(angles). Throws
/// ContractError on an empty tuple or n_samples < 1.
SampleReport empirical_reachable(std::span<const Angle> angles, std::int64_t n_samples, std::uint64_t seed,
                                 Execution exec = Execution::parallel);

/// Class angle of one sampled product; exposed for tests.
double sample_product_angle(std::span<const double> radians, StreamRng& rng);

enum class Route { inequalities, interval };

/// contains_identity for every tuple (1 = true). The inequality route honours `cap`.
std::vector<std::uint8_t> classify_identity(std::span<const std::vector<Angle>> tuples, Route route,
                                            Execution exec = Execution::parallel, int cap = kDefaultCap);

/// is_surjective (corrected range) for every tuple.
std::vector<std::uint8_t> classify_surjective(std::span<const std::vector<Angle>> tuples, Route route,
                                              Execution exec = Execution::parallel, int cap = kDefaultCap);

/// Worker threads the parallel kernels will use.
int parallel_threads();

}  // namespace classprod
