#pragma once

#include <asymcoh/surface/surface_model.hpp>

#include <optional>
#include <string>
#include <vector>

namespace asymcoh::surface {

bool is_nef(const SurfaceModel& model, const DivisorClass& d);
bool is_pseff(const SurfaceModel& model, const DivisorClass& d);

/// D = P + N with P nef, N = sum a_i C_i effective, (C_i . C_j) negative
/// definite and P . C_i = 0.
struct ZariskiDecomposition {
  DivisorClass positive;
  DivisorClass negative;
  std::vector<std::size_t> support;  // curve indices, increasing
  std::vector<Rational> coefficients;
  std::size_t iterations = 0;
  /// Support set after each iteration; grows monotonically.
  std::vector<std::vector<std::size_t>> support_history;
};

/// Iterative support growth: S <- S + {C : (D - N).C < 0}, then solve
/// Gram_S a = (D . C_i) so that (D - N) . C_i = 0 on S, until D - N is nef.
/// The result is certified before it is returned.
/// Throws NotPseudoEffective, IllConditionedModel.
ZariskiDecomposition zariski_decompose(const SurfaceModel& model, const DivisorClass& d);

/// Throws IllConditionedModel when any of the decomposition conditions fails.
void certify_decomposition(const SurfaceModel& model, const DivisorClass& d,
                           const ZariskiDecomposition& z);

/// Solves the support system for a fixed S without sign checks:
/// N = sum a_i C_i with (D - N) . C_i = 0 for i in S. Throws SingularMatrix.
ZariskiDecomposition decomposition_on_support(const SurfaceModel& model, const DivisorClass& d,
                                              const std::vector<std::size_t>& support);

enum class SurfaceCase { PseudoEffective, AntiPseudoEffective, Neither };

std::string to_string(SurfaceCase c);

struct SurfaceEvaluation {
  SurfaceCase kase = SurfaceCase::Neither;
  /// Decomposition of D (pseff case) or of -D (anti-pseff case).
  std::optional<ZariskiDecomposition> decomposition;
  CohomologyVector h;
};

/// (P^2, -N^2, 0) for pseff D, (0, -N^2, P^2) from -D = P + N, else (0, -D^2, 0).
SurfaceEvaluation evaluate_surface(const SurfaceModel& model, const DivisorClass& d);
CohomologyVector surface_asym_h(const SurfaceModel& model, const DivisorClass& d);

/// vol(D) = P_D^2 for pseff D, 0 otherwise.
Rational volume(const SurfaceModel& model, const DivisorClass& d);

bool is_big(const SurfaceModel& model, const DivisorClass& d);

/// Sorted names of the curves in the support of N_D. Throws NotBig.
std::vector<std::string> zariski_chamber(const SurfaceModel& model, const DivisorClass& d);

struct ZariskiChamber {
  std::vector<std::size_t> support;
  std::optional<DivisorClass> witness;  // big class whose negative part has exactly this support
};

/// Every subset S of the negative curves with negative definite Gram, in bitmask
/// order, with a witness when some big class has support(N_D) = S. Decided by the
/// LP: P . C = 0 on S, P . g > 0 for the remaining Mori generators and curves,
/// then P^2 > 0 and the witness P + sum_S C is re-decomposed as a certificate.
/// Throws UnsupportedConeMode in quadric mode.
std::vector<ZariskiChamber> enumerate_zariski_chambers(const SurfaceModel& model);

}  // namespace asymcoh::surface
