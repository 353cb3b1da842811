#pragma once

#include <asymcoh/core/variety.hpp>

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace asymcoh {

using ClassPair = std::pair<DivisorClass, DivisorClass>;

struct HomogeneityResult {
  bool passed = false;
  CohomologyVector scaled;    // evaluate(m * xi)
  CohomologyVector expected;  // m^n * evaluate(xi)
  std::string diagnostic;
};

/// evaluate(m * xi) == m^n * evaluate(xi), componentwise and exactly.
HomogeneityResult check_homogeneity(const VarietyModel& model, const DivisorClass& xi, unsigned m);

struct WallContinuityResult {
  bool passed = false;
  std::size_t comparisons = 0;
  Rational max_discrepancy;
  std::vector<ChamberLabel> adjacent_chambers;  // sorted, unique
  std::string diagnostic;
};

/// For every direction d and denominator k, locates the chambers of xi + d/k and
/// xi - d/k, then checks that each chamber's polynomials reproduce the model at
/// the probe point and, continued to xi, agree with evaluate(xi).
WallContinuityResult check_wall_continuity(const VarietyModel& model, const DivisorClass& xi_on_wall,
                                           std::span<const DivisorClass> directions,
                                           std::span<const unsigned> denominators);

/// sum_{k=1}^{n} a^{n-k} d^k
Rational lipschitz_scale(unsigned n, const Rational& a, const Rational& d);

struct LipschitzViolation {
  DivisorClass xi;
  DivisorClass eta;
  unsigned degree = 0;
  Rational ratio;
};

struct LipschitzReport {
  Rational constant;
  std::size_t pairs_tested = 0;
  Rational max_ratio;
  std::optional<ClassPair> argmax;
  std::vector<LipschitzViolation> violations;

  bool passed() const { return violations.empty(); }
};

/// Tests |h^i(xi) - h^i(eta)| <= C * sum_k max(|xi|,|eta|)^{n-k} |xi-eta|^k for every
/// pair and degree; max_ratio is the smallest C that would pass on this sample.
LipschitzReport check_lipschitz(const VarietyModel& model, std::span<const ClassPair> pairs,
                                const Rational& constant);

/// A homogeneous function on the model's lattice of classes, e.g. one h^i.
using ClassFunction = std::function<Rational(const DivisorClass&)>;

/// One instance of the per-direction hypothesis |f(D - b A_i) - f(D)|.
struct DirectionSample {
  DivisorClass d;
  std::size_t direction = 0;
  unsigned b = 1;
};

std::vector<DirectionSample> sample_direction_hypotheses(std::size_t rank, std::size_t count,
                                                         std::uint64_t seed);

/// Smallest per-direction constants C_i satisfying the hypothesis on `samples`.
std::vector<Rational> calibrate_direction_constants(const ClassFunction& f, unsigned n,
                                                    const NormedBasis& basis,
                                                    std::span<const DirectionSample> samples);

struct TelescopingResult {
  bool passed = false;
  Rational constant;  // (max C_i) * r * n * n!
  std::size_t pairs_tested = 0;
  Rational max_ratio;
  std::vector<ClassPair> violations;
};

/// Verifies the per-direction hypothesis for the supplied C_i on
/// `hypothesis_samples` (HypothesisNotVerified otherwise), then checks the
/// conclusion |f(D) - f(D')| <= C * sum_k max(|D|,|D'|)^{n-k} |D-D'|^k with
/// C = (max C_i) * r * n * n! on every test pair.
TelescopingResult check_telescoping_bound(const ClassFunction& f, unsigned n,
                                          const NormedBasis& basis,
                                          std::span<const Rational> per_direction_constants,
                                          std::span<const DirectionSample> hypothesis_samples,
                                          std::span<const ClassPair> test_pairs);

struct LimsupEstimate {
  Rational value;          // a_m / (m^n / n!) at the last sample
  std::size_t tail_index = 0;
  Rational tail_max;       // max of the normalised values over the trailing half
  std::size_t tail_max_index = 0;
};

/// Finite-prefix proxy for limsup_m a_m / (m^n / n!). `value` is the inf over
/// tail starts of the tail supremum, which on a finite prefix is the last
/// normalised term; `tail_max` bounds oscillating sequences from above.
/// Throws EmptySequence, InvalidArgument when m is not strictly increasing.
LimsupEstimate limsup_estimate(std::span<const std::pair<std::uint64_t, Rational>> sequence,
                               unsigned n);

/// max_i h^i(xi) / |xi|^n over the sample (zero classes skipped).
Rational norm_growth_ratio(const VarietyModel& model, std::span<const DivisorClass> sample);

}  // namespace asymcoh
