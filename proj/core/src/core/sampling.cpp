#include <asymcoh/core/sampling.hpp>

namespace asymcoh {

std::int64_t RationalSampler::next_int(std::int64_t lo, std::int64_t hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<std::int64_t>(engine_() % span);
}

Rational RationalSampler::next_rational(std::int64_t bound, std::int64_t max_den) {
  const std::int64_t den = next_int(1, max_den);
  const std::int64_t num = next_int(-bound * den, bound * den);
  return Rational(num, den);
}

DivisorClass RationalSampler::next_class(std::size_t rank, std::int64_t bound, std::int64_t max_den) {
  Vector v(rank);
  for (auto& c : v) c = next_rational(bound, max_den);
  return DivisorClass(std::move(v));
}

std::vector<DivisorClass> sample_classes(std::size_t rank, std::size_t count, std::uint64_t seed,
                                         SampleOptions options) {
  std::vector<DivisorClass> out;
  out.reserve(count);
  // Grid part: {-1,0,1}^rank without the origin, capped at a quarter of the sample.
  const std::size_t grid_cap = count / 4;
  std::vector<int> digits(rank, -1);
  while (out.size() < grid_cap) {
    bool nonzero = false;
    Vector v(rank);
    for (std::size_t i = 0; i < rank; ++i) {
      v[i] = digits[i];
      nonzero = nonzero || digits[i] != 0;
    }
    if (nonzero) out.emplace_back(std::move(v));
    std::size_t i = 0;
    while (i < rank && digits[i] == 1) digits[i++] = -1;
    if (i == rank) break;
    ++digits[i];
  }
  RationalSampler sampler(seed);
  while (out.size() < count) {
    DivisorClass c = sampler.next_class(rank, options.bound, options.max_den);
    if (!c.is_zero()) out.push_back(std::move(c));
  }
  return out;
}

std::vector<std::pair<DivisorClass, DivisorClass>> sample_pairs(std::size_t rank,
                                                                std::size_t count,
                                                                std::uint64_t seed,
                                                                SampleOptions options) {
  RationalSampler sampler(seed);
  std::vector<std::pair<DivisorClass, DivisorClass>> out;
  out.reserve(count);
  while (out.size() < count) {
    DivisorClass xi = sampler.next_class(rank, options.bound, options.max_den);
    DivisorClass eta;
    // Alternate between independent pairs and local perturbations of varying size.
    if (out.size() % 2 == 0) {
      eta = sampler.next_class(rank, options.bound, options.max_den);
    } else {
      const std::int64_t scale = sampler.next_int(1, 4);
      DivisorClass delta = sampler.next_class(rank, 1, options.max_den);
      eta = xi + Rational(1, scale) * delta;
    }
    out.emplace_back(std::move(xi), std::move(eta));
  }
  return out;
}

}  // namespace asymcoh
