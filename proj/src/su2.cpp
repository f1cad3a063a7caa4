#include "classprod/su2.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "classprod/errors.hpp"

namespace classprod {
namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

SU2Element::SU2Element(complex a, complex b) {
  const double norm = std::sqrt(std::norm(a) + std::norm(b));
  if (!(norm > 0.0) || !std::isfinite(norm)) throw ContractError("cannot normalize a zero or non-finite SU(2) column");
  a_ = a / norm;
  b_ = b / norm;
}

SU2Element SU2Element::diagonal(double l) { return SU2Element(std::polar(1.0, l), complex{0.0, 0.0}); }

SU2Element SU2Element::inverse() const noexcept {
  SU2Element inv;
  inv.a_ = std::conj(a_);
  inv.b_ = -b_;
  return inv;
}

double SU2Element::distance(const SU2Element& other) const noexcept {
  return std::max(std::abs(a_ - other.a_), std::abs(b_ - other.b_));
}

SU2Element operator*(const SU2Element& g, const SU2Element& h) {
  // First column of [[a1, -b1*], [b1, a1*]] [[a2, -b2*], [b2, a2*]].
  const auto a = g.a_ * h.a_ - std::conj(g.b_) * h.b_;
  const auto b = g.b_ * h.a_ + std::conj(g.a_) * h.b_;
  return SU2Element(a, b);
}

double class_angle(const SU2Element& g) noexcept {
  const double vector_part = std::sqrt(g.a().imag() * g.a().imag() + std::norm(g.b()));
  return std::atan2(vector_part, g.a().real());
}

StreamRng::StreamRng(std::uint64_t seed, std::uint64_t stream)
    : seed_(seed), engine_(splitmix64(splitmix64(seed) ^ splitmix64(stream + 0x632be59bd9b4e019ULL))) {}

SU2Element haar_sample(StreamRng& rng) {
  while (true) {
    const double x0 = rng.normal();
    const double x1 = rng.normal();
    const double x2 = rng.normal();
    const double x3 = rng.normal();
    const double r2 = x0 * x0 + x1 * x1 + x2 * x2 + x3 * x3;
    if (r2 > 1e-300) return SU2Element({x0, x1}, {x2, x3});
  }
}

SU2Element class_sample(double l, StreamRng& rng) {
  if (!(l >= 0.0 && l <= std::numbers::pi))
    throw RangeError("class angle " + std::to_string(l) + " is outside [0, pi]");
  const SU2Element k = haar_sample(rng);
  return k * SU2Element::diagonal(l) * k.inverse();
}

}  // namespace classprod
