#pragma once

#include <asymcoh/core/divisor.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace asymcoh {

using ChamberLabel = std::string;

/// A point on a chamber wall together with a direction that crosses it.
struct WallPoint {
  std::string wall;
  DivisorClass point;
  DivisorClass direction;
};

/// Contract shared by every variety model.
///
/// `evaluate` returns the asymptotic cohomology vector of a rational class and
/// is homogeneous of degree `dimension()` along rays. Away from walls each
/// class lies in exactly one chamber, and `chamber_polynomial` evaluates that
/// chamber's polynomials at an arbitrary class (so the polynomials may be
/// continued across walls and compared there).
class VarietyModel {
 public:
  virtual ~VarietyModel() = default;

  virtual std::string name() const = 0;
  virtual unsigned dimension() const = 0;
  virtual std::size_t rank() const = 0;
  virtual NormedBasis basis() const = 0;

  virtual CohomologyVector evaluate(const DivisorClass& xi) const = 0;
  /// std::nullopt when xi lies on a wall.
  virtual std::optional<ChamberLabel> chamber_id(const DivisorClass& xi) const = 0;
  virtual Vector chamber_polynomial(const ChamberLabel& label, const DivisorClass& xi) const = 0;
  /// Top self-intersection (xi^n), the asymptotic Euler characteristic.
  virtual Rational top_intersection(const DivisorClass& xi) const = 0;
  /// A proven constant C with h^i(xi) <= C * |xi|^n for all xi and i.
  virtual Rational norm_bound_constant() const = 0;
  /// Sample points on every enumerated wall, `per_wall` points each.
  virtual std::vector<WallPoint> wall_points(std::uint64_t seed, std::size_t per_wall) const = 0;
};

}  // namespace asymcoh
