#pragma once

#include <asymcoh/exactlin/matrix.hpp>

#include <compare>
#include <cstddef>
#include <vector>

namespace asymcoh {

/// Inertia of a real symmetric form.
struct Signature {
  std::size_t positives = 0;
  std::size_t negatives = 0;
  std::size_t zeros = 0;

  std::size_t dimension() const { return positives + negatives + zeros; }
  friend bool operator==(const Signature&, const Signature&) = default;
};

/// Exact inertia via symmetric (congruence) elimination. When every remaining
/// diagonal entry is zero, a pair (i, j) with m_ij != 0 is merged by
/// row_i += row_j, col_i += col_j, which creates the pivot 2*m_ij.
Signature signature(const SymMatrix& m);

bool is_negative_definite(const SymMatrix& m);

/// Solves M x = rhs. Throws SingularMatrix, DimensionMismatch.
Vector solve_symmetric(const SymMatrix& m, const Vector& rhs);

/// General square solve with exact Gaussian elimination.
Vector solve(const Matrix& m, const Vector& rhs);

Rational determinant(const Matrix& m);

std::size_t rank(const Matrix& m);

/// Basis of {x : M x = 0}, one vector per free column of the reduced row echelon form.
std::vector<Vector> nullspace(const Matrix& m);

/// Pfaffian by skew-symmetric Schur complements: Pf(A) = a01 * Pf(S) where S is the
/// Schur complement of the leading 2x2 block. Throws OddDimension.
Rational pfaffian(const AntisymMatrix& e);

}  // namespace asymcoh
