#pragma once

// Seeded sampling of generation parameters. Each stream is derived from
// (seed, stream id) so parallel cases stay reproducible.

#include "a22/generation.hpp"

#include <cstdint>
#include <functional>
#include <random>
#include <vector>

namespace a22 {

class RatSampler {
 public:
  RatSampler(std::uint64_t seed, std::uint64_t stream = 0);

  /// p/q with p ∈ [−9, 9], q ∈ [1, 4].
  Rat next();
  std::vector<Rat> vector(int m);
  std::uint64_t next_u64() { return rng_(); }

 private:
  long uniform(long lo, long hi);
  std::mt19937_64 rng_;
};

/// Draws c until `accept(c)` returns without throwing DegenerateDivision or
/// InfertileError and returns true. Throws std::runtime_error after
/// `max_attempts` rejections.
std::vector<Rat> sample_parameters(RatSampler& s, int m, const std::function<bool(const std::vector<Rat>&)>& accept,
                                   int max_attempts = 200);

/// A trace of generate_multistep(J, c) at sampled c whose dual-number
/// tangents are all defined and whose final pair is generic.
QTrace sample_trace(const BasicSequence& J, RatSampler& s);

}  // namespace a22

namespace a22 {

/// Random polynomial of degree ≤ max_degree with sampled coefficients.
QPoly random_poly(RatSampler& s, int max_degree);
/// Random rational function with a nonzero denominator of degree ≤ max_den_degree.
QRatFunc random_ratfunc(RatSampler& s, int max_num_degree, int max_den_degree);

}  // namespace a22
