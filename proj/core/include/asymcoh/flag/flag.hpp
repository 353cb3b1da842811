#pragma once

#include <asymcoh/core/divisor.hpp>
#include <asymcoh/exactlin/lp.hpp>
#include <asymcoh/flag/root_system.hpp>

#include <optional>
#include <utility>
#include <vector>

namespace asymcoh::flag {

/// Weight in the fundamental-weight basis; integral weights have integer coordinates.
using Weight = DivisorClass;

/// Number of positive roots v with <lambda + rho, v^vee> < 0, or std::nullopt
/// when lambda + rho lies on a wall. Throws InvalidArgument for non-integral lambda.
std::optional<unsigned> bwb_index(const RootSystem& rs, const Weight& lambda);

/// Nonzero cohomology of the line bundle L_lambda on G/B as (degree, dimension)
/// pairs: empty on walls, otherwise a single entry.
std::vector<std::pair<unsigned, Integer>> bwb_cohomology(const RootSystem& rs, const Weight& lambda);

/// Dominant Weyl conjugate of mu by repeated simple reflections, with the number
/// of reflections used (the length of the Weyl element).
std::pair<Weight, unsigned> dominant_conjugate(const RootSystem& rs, const Weight& mu);

/// prod_v <lambda + rho, v^vee> / <rho, v^vee>. Throws NotDominant.
Integer weyl_dim(const RootSystem& rs, const Weight& lambda);

/// Number of positive roots with <alpha, v^vee> < 0, std::nullopt on a wall.
std::optional<unsigned> asymptotic_index(const RootSystem& rs, const Weight& alpha);

/// n! * prod_v <alpha, v^vee> / <rho, v^vee>, the top self-intersection (alpha^n).
Rational top_self_intersection(const RootSystem& rs, const Weight& alpha);

/// Asymptotic cohomology: |(alpha^n)| in degree ind(alpha), zero elsewhere and on walls.
CohomologyVector flag_asym_h(const RootSystem& rs, const Weight& alpha);

struct ChamberDescriptor {
  std::vector<Sign> signs;  // one per positive root, in positive_roots() order
  unsigned index = 0;       // number of negative signs
  bool nonempty = false;
  Vector witness;           // interior point when nonempty
};

inline constexpr std::size_t kMaxEnumeratedRoots = 24;

/// All nonempty open chambers of the arrangement {<alpha, v^vee> = 0}, in
/// lexicographic order of sign vectors with + before -. Every one of the 2^n
/// sign vectors is tested; n above kMaxEnumeratedRoots throws UnsupportedType.
std::vector<ChamberDescriptor> enumerate_chambers(const RootSystem& rs);

std::string sign_string(const std::vector<Sign>& signs);

}  // namespace asymcoh::flag
