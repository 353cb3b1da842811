#pragma once

#include <asymcoh/core/variety.hpp>
#include <asymcoh/flag/root_system.hpp>

namespace asymcoh::flag {

/// G/B as a VarietyModel. Chambers are labelled by their sign vectors ("++-").
class FlagVariety final : public VarietyModel {
 public:
  explicit FlagVariety(RootSystem rs);

  const RootSystem& root_system() const { return rs_; }

  std::string name() const override { return "flag " + rs_.label(); }
  unsigned dimension() const override { return rs_.num_positive_roots(); }
  std::size_t rank() const override { return rs_.rank(); }
  NormedBasis basis() const override;
  CohomologyVector evaluate(const DivisorClass& xi) const override;
  std::optional<ChamberLabel> chamber_id(const DivisorClass& xi) const override;
  Vector chamber_polynomial(const ChamberLabel& label, const DivisorClass& xi) const override;
  Rational top_intersection(const DivisorClass& xi) const override;
  Rational norm_bound_constant() const override;
  /// One wall per positive root; points are random combinations of a basis of v^perp
  /// kept off every other hyperplane, crossed along the coroot-normal direction.
  std::vector<WallPoint> wall_points(std::uint64_t seed, std::size_t per_wall) const override;

 private:
  RootSystem rs_;
};

}  // namespace asymcoh::flag
