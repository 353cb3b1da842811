#pragma once

#include <asymcoh/abelian/abelian.hpp>
#include <asymcoh/core/variety.hpp>

namespace asymcoh::abelian {

/// AbelianModel as a VarietyModel; chambers are labelled by the index ("0".."g").
class AbelianVariety final : public VarietyModel {
 public:
  AbelianVariety(std::string name, AbelianModel model);

  const AbelianModel& model() const { return model_; }

  std::string name() const override { return name_; }
  unsigned dimension() const override { return model_.g(); }
  std::size_t rank() const override { return model_.rank(); }
  NormedBasis basis() const override;
  CohomologyVector evaluate(const DivisorClass& xi) const override;
  std::optional<ChamberLabel> chamber_id(const DivisorClass& xi) const override;
  Vector chamber_polynomial(const ChamberLabel& label, const DivisorClass& xi) const override;
  Rational top_intersection(const DivisorClass& xi) const override;
  Rational norm_bound_constant() const override;
  /// g = 1: points of the hyperplane Pf = 0. g = 2: small degenerate integer
  /// classes plus the second root of Pf along random lines through them.
  /// g >= 3: small degenerate integer classes only.
  std::vector<WallPoint> wall_points(std::uint64_t seed, std::size_t per_wall) const override;

 private:
  std::string name_;
  AbelianModel model_;
};

/// The E x E closed-form preset as a VarietyModel in the basis (e1, e2, delta).
class ExEPreset final : public VarietyModel {
 public:
  std::string name() const override { return "abelian ExE"; }
  unsigned dimension() const override { return 2; }
  std::size_t rank() const override { return 3; }
  NormedBasis basis() const override { return NormedBasis({"e1", "e2", "delta"}); }
  CohomologyVector evaluate(const DivisorClass& xi) const override;
  std::optional<ChamberLabel> chamber_id(const DivisorClass& xi) const override;
  Vector chamber_polynomial(const ChamberLabel& label, const DivisorClass& xi) const override;
  Rational top_intersection(const DivisorClass& xi) const override;
  Rational norm_bound_constant() const override { return 6; }
  /// Rational points of xy + xz + yz = 0 via z = -xy / (x + y).
  std::vector<WallPoint> wall_points(std::uint64_t seed, std::size_t per_wall) const override;
};

}  // namespace asymcoh::abelian
