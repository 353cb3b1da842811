#include <asymcoh/core/harness.hpp>
#include <asymcoh/core/sampling.hpp>
#include <asymcoh/error.hpp>

#include <algorithm>

namespace asymcoh {

HomogeneityResult check_homogeneity(const VarietyModel& model, const DivisorClass& xi, unsigned m) {
  if (m == 0) throw InvalidArgument("homogeneity multiplier must be >= 1");
  HomogeneityResult r;
  const Rational factor = pow(Rational(m), model.dimension());
  r.scaled = model.evaluate(Rational(m) * xi);
  r.expected = model.evaluate(xi).scaled(factor);
  r.passed = r.scaled == r.expected;
  if (!r.passed) {
    r.diagnostic = "h(" + std::to_string(m) + " * " + xi.to_string() + ") = " + r.scaled.to_string() +
                   " but " + std::to_string(m) + "^" + std::to_string(model.dimension()) +
                   " * h(xi) = " + r.expected.to_string();
  }
  return r;
}

WallContinuityResult check_wall_continuity(const VarietyModel& model, const DivisorClass& xi_on_wall,
                                           std::span<const DivisorClass> directions,
                                           std::span<const unsigned> denominators) {
  WallContinuityResult r;
  r.max_discrepancy = 0;
  if (model.chamber_id(xi_on_wall).has_value()) {
    r.diagnostic = xi_on_wall.to_string() + " is not on a wall";
    return r;
  }
  const CohomologyVector at_wall = model.evaluate(xi_on_wall);
  bool consistent = true;
  for (const auto& d : directions) {
    for (unsigned k : denominators) {
      const DivisorClass step = Rational(1, k) * d;
      for (const DivisorClass& probe : {xi_on_wall + step, xi_on_wall - step}) {
        const auto label = model.chamber_id(probe);
        if (!label) continue;
        if (std::find(r.adjacent_chambers.begin(), r.adjacent_chambers.end(), *label) ==
            r.adjacent_chambers.end()) {
          r.adjacent_chambers.push_back(*label);
        }
        // The chamber polynomial must represent the model inside its chamber ...
        if (model.chamber_polynomial(*label, probe) != model.evaluate(probe).values) {
          consistent = false;
          if (r.diagnostic.empty()) {
            r.diagnostic = "chamber " + *label + " polynomial disagrees with evaluate at " + probe.to_string();
          }
        }
        // ... and its continuation to the wall must match the wall value.
        const Vector continued = model.chamber_polynomial(*label, xi_on_wall);
        for (std::size_t i = 0; i < continued.size(); ++i) {
          const Rational gap = abs(continued[i] - at_wall[i]);
          if (gap > r.max_discrepancy) {
            r.max_discrepancy = gap;
            if (r.diagnostic.empty()) {
              r.diagnostic = "chamber " + *label + " continues to " + to_string(continued[i]) +
                             " in degree " + std::to_string(i) + " at " + xi_on_wall.to_string() +
                             " where the model gives " + to_string(at_wall[i]);
            }
          }
        }
        ++r.comparisons;
      }
    }
  }
  std::sort(r.adjacent_chambers.begin(), r.adjacent_chambers.end());
  r.passed = consistent && r.max_discrepancy.is_zero() && r.comparisons > 0;
  if (r.comparisons == 0 && r.diagnostic.empty()) r.diagnostic = "no probe left the wall";
  return r;
}

Rational lipschitz_scale(unsigned n, const Rational& a, const Rational& d) {
  Rational s = 0;
  for (unsigned k = 1; k <= n; ++k) s += pow(a, n - k) * pow(d, k);
  return s;
}

LipschitzReport check_lipschitz(const VarietyModel& model, std::span<const ClassPair> pairs,
                                const Rational& constant) {
  LipschitzReport rep;
  rep.constant = constant;
  rep.max_ratio = 0;
  const NormedBasis basis = model.basis();
  const unsigned n = model.dimension();
  for (const auto& [xi, eta] : pairs) {
    if (xi.rank() != model.rank() || eta.rank() != model.rank()) {
      throw DimensionMismatch("Lipschitz pair rank does not match the model");
    }
    ++rep.pairs_tested;
    const CohomologyVector hx = model.evaluate(xi);
    const CohomologyVector hy = model.evaluate(eta);
    const Rational scale = lipschitz_scale(n, std::max(basis.norm(xi), basis.norm(eta)),
                                           basis.norm(xi - eta));
    for (unsigned i = 0; i <= n; ++i) {
      const Rational diff = abs(hx[i] - hy[i]);
      if (diff.is_zero()) continue;
      // scale == 0 forces xi == eta, where diff vanishes.
      const Rational ratio = diff / scale;
      if (ratio > rep.max_ratio) {
        rep.max_ratio = ratio;
        rep.argmax = ClassPair{xi, eta};
      }
      if (diff > constant * scale) rep.violations.push_back({xi, eta, i, ratio});
    }
  }
  return rep;
}

std::vector<DirectionSample> sample_direction_hypotheses(std::size_t rank, std::size_t count,
                                                         std::uint64_t seed) {
  RationalSampler sampler(seed);
  std::vector<DirectionSample> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    DirectionSample s;
    s.direction = i % rank;
    s.b = static_cast<unsigned>(sampler.next_int(1, 4));
    // Every fifth sample sits at small norm.
    s.d = sampler.next_class(rank, i % 5 == 0 ? 1 : 10, 6);
    out.push_back(std::move(s));
  }
  return out;
}

namespace {

Rational direction_ratio(const ClassFunction& f, unsigned n, const NormedBasis& basis,
                         const DirectionSample& s) {
  DivisorClass shifted = s.d;
  shifted[s.direction] -= s.b;
  const Rational diff = abs(f(shifted) - f(s.d));
  return diff / lipschitz_scale(n, basis.norm(s.d), Rational(s.b));
}

}  // namespace

std::vector<Rational> calibrate_direction_constants(const ClassFunction& f, unsigned n,
                                                    const NormedBasis& basis,
                                                    std::span<const DirectionSample> samples) {
  std::vector<Rational> c(basis.rank(), Rational(0));
  for (const auto& s : samples) {
    if (s.direction >= basis.rank()) throw DimensionMismatch("direction index out of range");
    c[s.direction] = std::max(c[s.direction], direction_ratio(f, n, basis, s));
  }
  return c;
}

TelescopingResult check_telescoping_bound(const ClassFunction& f, unsigned n,
                                          const NormedBasis& basis,
                                          std::span<const Rational> per_direction_constants,
                                          std::span<const DirectionSample> hypothesis_samples,
                                          std::span<const ClassPair> test_pairs) {
  const std::size_t r = basis.rank();
  if (per_direction_constants.size() != r) {
    throw DimensionMismatch("expected one constant per basis direction");
  }
  for (const auto& s : hypothesis_samples) {
    if (s.direction >= r) throw DimensionMismatch("direction index out of range");
    const Rational ratio = direction_ratio(f, n, basis, s);
    if (ratio > per_direction_constants[s.direction]) {
      throw HypothesisNotVerified("direction " + std::to_string(s.direction) + " at D = " +
                                  s.d.to_string() + ", b = " + std::to_string(s.b) +
                                  " needs C >= " + to_string(ratio));
    }
  }
  TelescopingResult res;
  const Rational cmax = *std::max_element(per_direction_constants.begin(), per_direction_constants.end());
  res.constant = cmax * Rational(r) * Rational(n) * Rational(factorial(n));
  res.max_ratio = 0;
  for (const auto& [d1, d2] : test_pairs) {
    ++res.pairs_tested;
    const Rational diff = abs(f(d1) - f(d2));
    if (diff.is_zero()) continue;
    const Rational scale = lipschitz_scale(n, std::max(basis.norm(d1), basis.norm(d2)), basis.norm(d1 - d2));
    const Rational ratio = diff / scale;
    res.max_ratio = std::max(res.max_ratio, ratio);
    if (ratio > res.constant) res.violations.emplace_back(d1, d2);
  }
  res.passed = res.violations.empty();
  return res;
}

LimsupEstimate limsup_estimate(std::span<const std::pair<std::uint64_t, Rational>> sequence,
                               unsigned n) {
  if (sequence.empty()) throw EmptySequence();
  for (std::size_t i = 1; i < sequence.size(); ++i) {
    if (sequence[i].first <= sequence[i - 1].first) {
      throw InvalidArgument("limsup_estimate: m must be strictly increasing");
    }
  }
  const Rational nfact(factorial(n));
  auto normalised = [&](std::size_t i) {
    const Rational m(sequence[i].first);
    return sequence[i].second * nfact / pow(m, n);
  };
  LimsupEstimate est;
  est.tail_index = sequence.size() - 1;
  est.value = normalised(est.tail_index);
  const std::size_t start = sequence.size() / 2;
  est.tail_max_index = start;
  est.tail_max = normalised(start);
  for (std::size_t i = start + 1; i < sequence.size(); ++i) {
    const Rational v = normalised(i);
    if (v > est.tail_max) {
      est.tail_max = v;
      est.tail_max_index = i;
    }
  }
  return est;
}

Rational norm_growth_ratio(const VarietyModel& model, std::span<const DivisorClass> sample) {
  const NormedBasis basis = model.basis();
  Rational best = 0;
  for (const auto& xi : sample) {
    const Rational norm = basis.norm(xi);
    if (norm.is_zero()) continue;
    const Rational denom = pow(norm, model.dimension());
    for (const auto& v : model.evaluate(xi).values) best = std::max(best, v / denom);
  }
  return best;
}

}  // namespace asymcoh
