#pragma once

#include <asymcoh/core/divisor.hpp>
#include <asymcoh/exactlin/linalg.hpp>

#include <string>
#include <vector>

namespace asymcoh::surface {

struct NegativeCurve {
  std::string name;
  DivisorClass cls;
};

enum class ConeMode { Polyhedral, Quadric };

/// Numerical model of a smooth projective surface: N^1 with its intersection
/// form, the irreducible negative curves, and a description of the effective cone.
///
/// Polyhedral mode: `mori` generates the closed cone of curves; pseudo-effective
/// classes are tested against mori + negative curves. Results are only as good
/// as this curve list, which cannot be checked geometrically.
/// Quadric mode: nef = pseff = {D^2 >= 0, D.ample >= 0}; no negative curves.
class SurfaceModel {
 public:
  /// Validates the Hodge-index signature (1, r-1, 0), ample^2 > 0, ample.C > 0
  /// and C^2 < 0 for every curve, ample.g > 0 for every Mori generator, and
  /// in polyhedral mode non-empty generators whose cone contains the ample
  /// class. Throws ModelValidationError.
  static SurfaceModel create(std::vector<std::string> basis_labels, SymMatrix gram,
                             std::vector<NegativeCurve> curves, ConeMode mode,
                             std::vector<DivisorClass> mori, DivisorClass ample);

  std::size_t rank() const { return gram_.dimension(); }
  const std::vector<std::string>& basis_labels() const { return labels_; }
  const SymMatrix& gram() const { return gram_; }
  const std::vector<NegativeCurve>& curves() const { return curves_; }
  ConeMode cone_mode() const { return mode_; }
  const std::vector<DivisorClass>& mori_generators() const { return mori_; }
  const DivisorClass& ample() const { return ample_; }

  /// D . E. Throws DimensionMismatch.
  Rational intersect(const DivisorClass& d, const DivisorClass& e) const;
  /// Gram matrix (C_i . C_j) over the given curve indices.
  SymMatrix curve_gram(const std::vector<std::size_t>& support) const;
  /// Generators of the closed effective cone in polyhedral mode: mori then curves.
  std::vector<Vector> effective_generators() const;

 private:
  SurfaceModel() = default;

  std::vector<std::string> labels_;
  SymMatrix gram_{Matrix(0, 0)};
  std::vector<NegativeCurve> curves_;
  ConeMode mode_ = ConeMode::Polyhedral;
  std::vector<DivisorClass> mori_;
  DivisorClass ample_;
};

/// Blow-up of P^2 in k <= 2 general points with basis (H, E_1, ..., E_k), the
/// (-1)-curves as negative curves, and the Mori cone spanned by them (plus H - E_1 for k = 1).
SurfaceModel blowup_plane(unsigned points);

/// E x E in the basis (e1, e2, delta), quadric cone mode, ample class (1, 1, 1).
SurfaceModel elliptic_square();

}  // namespace asymcoh::surface
