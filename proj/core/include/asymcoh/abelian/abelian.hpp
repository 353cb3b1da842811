#pragma once

#include <asymcoh/core/divisor.hpp>
#include <asymcoh/exactlin/linalg.hpp>

#include <optional>
#include <vector>

namespace asymcoh::abelian {

/// g x g complex matrix stored as real and imaginary parts.
struct ComplexMatrix {
  Matrix re;
  Matrix im;
};

/// Abelian variety V / L of dimension g with a rational basis of N^1 given by
/// Hermitian forms H_1, ..., H_r.
///
/// Realification: z_a = x_a + i y_a is stored as coordinates (x_1, y_1, x_2, y_2, ...).
/// With H = A + iB and H(u, v) = u^* H v, the real part of H is the symmetric matrix
/// with blocks [[A, -B], [B, A]] and E = Im H has blocks [[B, A], [-A, B]] (in
/// (x, y) block order, interleaved per coordinate). Lattice generators are the
/// columns of Lambda and E_L = Lambda^T E Lambda.
class AbelianModel {
 public:
  /// Throws ModelValidationError unless every H_k is Hermitian, the lattice has
  /// 2g independent generators of length 2g, and every E_k is integral on L x L.
  static AbelianModel create(unsigned g, std::vector<ComplexMatrix> basis_forms,
                             std::vector<Vector> lattice);

  unsigned g() const { return g_; }
  std::size_t rank() const { return forms_.size(); }
  const std::vector<ComplexMatrix>& basis_forms() const { return forms_; }
  const Matrix& lattice() const { return lattice_; }
  /// +1 or -1: sign of det(Lambda), so that Pf(E_xi) = orientation * det H_xi.
  int orientation() const { return orientation_; }

  ComplexMatrix hermitian_form(const DivisorClass& xi) const;
  SymMatrix realified_form(const DivisorClass& xi) const;
  AntisymMatrix lattice_form(const DivisorClass& xi) const;
  const AntisymMatrix& basis_lattice_form(std::size_t k) const { return lattice_forms_[k]; }

 private:
  AbelianModel() = default;
  void require_rank(const DivisorClass& xi) const;

  unsigned g_ = 0;
  std::vector<ComplexMatrix> forms_;
  Matrix lattice_;
  std::vector<AntisymMatrix> lattice_forms_;
  int orientation_ = 1;
};

/// Number of negative eigenvalues of H_xi, or std::nullopt when H_xi is degenerate.
std::optional<unsigned> hermitian_index(const AbelianModel& model, const DivisorClass& xi);

/// g! |Pf(E_xi)| in degree ind(xi); all zero on the degenerate locus.
CohomologyVector abelian_asym_h(const AbelianModel& model, const DivisorClass& xi);

/// (xi^g) = g! * orientation * Pf(E_xi).
Rational abelian_top_intersection(const AbelianModel& model, const DivisorClass& xi);

/// E x E in the basis (e1, e2, delta): q = xi^2 = 2(xy + xz + yz); index 0 when
/// xi is ample, 2 when -xi is ample, 1 when q < 0; |q| in that degree.
CohomologyVector exe_asym_h(const Rational& x, const Rational& y, const Rational& z);

/// Index of the E x E preset class, std::nullopt when q = 0.
std::optional<unsigned> exe_index(const Rational& x, const Rational& y, const Rational& z);

/// Elliptic curve C / (Z + iZ) with H = [degree].
AbelianModel elliptic_curve(const Rational& degree);

/// Full E x E model for E = C / (Z + iZ): e1 = diag(1, 0), e2 = diag(0, 1),
/// delta = [[1, -1], [-1, 1]] (pull-back of a point under (z1, z2) -> z1 - z2).
AbelianModel elliptic_square_model();

}  // namespace asymcoh::abelian
