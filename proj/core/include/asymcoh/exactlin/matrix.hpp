#pragma once

#include <asymcoh/exactlin/rational.hpp>

#include <cstddef>
#include <initializer_list>
#include <vector>

namespace asymcoh {

/// Dense row-major rational matrix.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);
  Matrix(std::initializer_list<std::initializer_list<Rational>> rows);
  static Matrix identity(std::size_t n);
  static Matrix from_rows(const std::vector<Vector>& rows);
  static Matrix from_columns(const std::vector<Vector>& cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Vector row(std::size_t i) const;
  Vector column(std::size_t j) const;
  Matrix transpose() const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Vector operator*(const Matrix& a, const Vector& x);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Rational& s, const Matrix& a);
  friend bool operator==(const Matrix& a, const Matrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Symmetric rational matrix; symmetry is checked on construction.
class SymMatrix {
 public:
  explicit SymMatrix(Matrix m);
  SymMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

  std::size_t dimension() const { return m_.rows(); }
  const Rational& operator()(std::size_t i, std::size_t j) const { return m_(i, j); }
  const Matrix& matrix() const { return m_; }

  /// Bilinear form x^T M y.
  Rational form(const Vector& x, const Vector& y) const;
  /// Principal submatrix on the given index set.
  SymMatrix restrict_to(const std::vector<std::size_t>& indices) const;
  /// Congruence S^T M S.
  SymMatrix congruent(const Matrix& s) const;

 private:
  Matrix m_;
};

/// Antisymmetric rational matrix of even dimension is not enforced here;
/// `pfaffian` rejects odd dimensions.
class AntisymMatrix {
 public:
  explicit AntisymMatrix(Matrix m);
  AntisymMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

  std::size_t dimension() const { return m_.rows(); }
  const Rational& operator()(std::size_t i, std::size_t j) const { return m_(i, j); }
  const Matrix& matrix() const { return m_; }

 private:
  Matrix m_;
};

}  // namespace asymcoh
