#pragma once

#include <asymcoh/exactlin/matrix.hpp>

#include <optional>
#include <span>
#include <vector>

namespace asymcoh {

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpResult {
  LpStatus status = LpStatus::Infeasible;
  Rational objective;
  Vector x;
};

/// maximize c.x subject to A x = b, x >= 0.
///
/// Dense two-phase tableau simplex over exact rationals. Both the entering and
/// the leaving variable are chosen by Bland's smallest-index rule.
LpResult solve_standard_lp(const Matrix& a, const Vector& b, const Vector& c);

enum class Sign { Positive, Negative };

/// True iff point = sum lambda_i g_i with all lambda_i >= 0.
bool cone_member(std::span<const Vector> generators, const Vector& point);

/// Nonnegative coefficients expressing `point` in the generators, if any.
std::optional<Vector> cone_coefficients(std::span<const Vector> generators, const Vector& point);

/// Finds x with e.x = 0 for every e in `equalities` and s.x > 0 for every s in
/// `strict`. Solved as: maximize t subject to s.x >= t, t <= 1; feasible iff t* > 0.
std::optional<Vector> strict_feasible_point(std::span<const Vector> equalities,
                                            std::span<const Vector> strict);

/// True iff some x has sign(x . normal_i) = signs_i strictly for all i.
bool open_sign_feasible(std::span<const Vector> normals, std::span<const Sign> signs);

std::optional<Vector> open_sign_witness(std::span<const Vector> normals,
                                        std::span<const Sign> signs);

}  // namespace asymcoh
