#pragma once

// Floating-point SU(2). An element is stored as the first column (a, b) of
//
//   [ a  -conj(b) ]
//   [ b   conj(a) ]
//
// with |a|^2 + |b|^2 = 1, i.e. the unit quaternion a.real + a.imag i + b.real j + b.imag k.

#include <complex>
#include <cstdint>
#include <random>

namespace classprod {

class SU2Element {
 public:
  using complex = std::complex<double>;

  /// The identity.
  SU2Element() = default;
  /// Normalizes (a, b); throws ContractError if both are zero or non-finite.
  SU2Element(complex a, complex b);

  static SU2Element identity() { return {}; }
  /// diag(e^{i l}, e^{-i l}).
  static SU2Element diagonal(double l);

  const complex& a() const noexcept { return a_; }
  const complex& b() const noexcept { return b_; }

  SU2Element inverse() const noexcept;
  complex determinant() const noexcept { return std::norm(a_) + std::norm(b_); }
  double trace() const noexcept { return 2.0 * a_.real(); }
  /// max |entry| distance from the other element.
  double distance(const SU2Element& other) const noexcept;

  friend SU2Element operator*(const SU2Element& g, const SU2Element& h);

 private:
  complex a_{1.0, 0.0};
  complex b_{0.0, 0.0};
};

/// The unique l in [0, pi] with g in C(l), i.e. trace g = 2 cos l.
///
/// Computed as atan2(|vector part|, Re a), which equals arccos(Re a) but keeps
/// full precision near l = 0 and l = pi.
double class_angle(const SU2Element& g) noexcept;

/// Deterministic generator with cheap, reproducible substreams.
///
/// Stream `k` of master seed `s` is seeded from splitmix64 of (s, k), so the
/// same (seed, stream) pair always yields the same sequence.
class StreamRng {
 public:
  using engine_type = std::mt19937_64;
  using result_type = engine_type::result_type;

  explicit StreamRng(std::uint64_t seed, std::uint64_t stream = 0);

  /// Independent generator for substream `stream` of this generator's seed.
  StreamRng split(std::uint64_t stream) const { return StreamRng(seed_, stream); }
  std::uint64_t seed() const noexcept { return seed_; }

  static constexpr result_type min() { return engine_type::min(); }
  static constexpr result_type max() { return engine_type::max(); }
  result_type operator()() { return engine_(); }

  double normal() { return normal_(engine_); }

 private:
  std::uint64_t seed_;
  engine_type engine_;
  std::normal_distribution<double> normal_{0.0, 1.0};
};

/// Haar-random element: a standard 4-d Gaussian normalized to the unit sphere.
SU2Element haar_sample(StreamRng& rng);

/// k diag(e^{il}, e^{-il}) k^{-1} with k Haar-random. Throws RangeError unless
/// 0 <= l <= pi.
SU2Element class_sample(double l, StreamRng& rng);

}  // namespace classprod
