#pragma once

#include <asymcoh/core/variety.hpp>
#include <asymcoh/surface/zariski.hpp>

namespace asymcoh::surface {

/// Surface as a VarietyModel.
///
/// Chamber labels: "P{C1,C2}" for pseff classes with that Zariski support,
/// "A{...}" for classes whose negative is pseff, "X" for neither. Walls are
/// the non-big boundary of +-Eff and the big classes where P_D . C = 0 for a
/// negative curve outside the support.
class SurfaceVariety final : public VarietyModel {
 public:
  SurfaceVariety(std::string name, SurfaceModel model);

  const SurfaceModel& model() const { return model_; }

  std::string name() const override { return name_; }
  unsigned dimension() const override { return 2; }
  std::size_t rank() const override { return model_.rank(); }
  NormedBasis basis() const override { return NormedBasis(model_.basis_labels()); }
  CohomologyVector evaluate(const DivisorClass& xi) const override;
  std::optional<ChamberLabel> chamber_id(const DivisorClass& xi) const override;
  Vector chamber_polynomial(const ChamberLabel& label, const DivisorClass& xi) const override;
  Rational top_intersection(const DivisorClass& xi) const override;
  Rational norm_bound_constant() const override;
  std::vector<WallPoint> wall_points(std::uint64_t seed, std::size_t per_wall) const override;

 private:
  std::vector<std::size_t> parse_support(std::string_view names) const;
  std::string support_label(const std::vector<std::size_t>& support) const;
  std::vector<WallPoint> polyhedral_wall_points(std::uint64_t seed, std::size_t per_wall) const;
  std::vector<WallPoint> quadric_wall_points(std::uint64_t seed, std::size_t per_wall) const;

  std::string name_;
  SurfaceModel model_;
};

}  // namespace asymcoh::surface
