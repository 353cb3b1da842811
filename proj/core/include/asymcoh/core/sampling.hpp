#pragma once

#include <asymcoh/core/divisor.hpp>

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

namespace asymcoh {

/// Deterministic rational sampler. Only raw mt19937_64 output is consumed
/// (no std distributions); a seed gives the same stream on every platform.
class RationalSampler {
 public:
  explicit RationalSampler(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }
  /// Uniform-ish integer in [lo, hi].
  std::int64_t next_int(std::int64_t lo, std::int64_t hi);
  /// p/q with q in [1, max_den] and |p/q| <= bound.
  Rational next_rational(std::int64_t bound, std::int64_t max_den);
  DivisorClass next_class(std::size_t rank, std::int64_t bound, std::int64_t max_den);

 private:
  std::mt19937_64 engine_;
};

struct SampleOptions {
  std::int64_t bound = 10;
  std::int64_t max_den = 6;
};

/// `count` classes: first the integer grid {-1,0,1}^rank \ {0} (as far as it
/// fits), then pseudo-random rationals from `seed`.
std::vector<DivisorClass> sample_classes(std::size_t rank, std::size_t count, std::uint64_t seed,
                                         SampleOptions options = {});

std::vector<std::pair<DivisorClass, DivisorClass>> sample_pairs(std::size_t rank,
                                                                std::size_t count,
                                                                std::uint64_t seed,
                                                                SampleOptions options = {});

}  // namespace asymcoh
