#include <asymcoh/error.hpp>
#include <asymcoh/exactlin/matrix.hpp>

#include <string>

namespace asymcoh {

Matrix::Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}

Matrix::Matrix(std::initializer_list<std::initializer_list<Rational>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw DimensionMismatch("ragged matrix literal");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vector>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  Matrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw DimensionMismatch("ragged row list");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

Matrix Matrix::from_columns(const std::vector<Vector>& cols) {
  return from_rows(cols).transpose();
}

Vector Matrix::row(std::size_t i) const {
  return Vector(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

Vector Matrix::column(std::size_t j) const {
  Vector v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw DimensionMismatch("matrix product shape mismatch");
  Matrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rational& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

Vector operator*(const Matrix& a, const Vector& x) {
  if (a.cols_ != x.size()) throw DimensionMismatch("matrix-vector shape mismatch");
  Vector y(a.rows_, Rational(0));
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t j = 0; j < a.cols_; ++j) y[i] += a(i, j) * x[j];
  return y;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionMismatch("matrix sum shape mismatch");
  Matrix c = a;
  for (std::size_t i = 0; i < c.data_.size(); ++i) c.data_[i] += b.data_[i];
  return c;
}

Matrix operator*(const Rational& s, const Matrix& a) {
  Matrix c = a;
  for (auto& x : c.data_) x *= s;
  return c;
}

SymMatrix::SymMatrix(Matrix m) : m_(std::move(m)) {
  if (!m_.is_square()) throw DimensionMismatch("symmetric matrix must be square");
  for (std::size_t i = 0; i < m_.rows(); ++i)
    for (std::size_t j = i + 1; j < m_.cols(); ++j)
      if (m_(i, j) != m_(j, i)) {
        throw InvalidArgument("matrix is not symmetric at (" + std::to_string(i) + "," +
                              std::to_string(j) + ")");
      }
}

SymMatrix::SymMatrix(std::initializer_list<std::initializer_list<Rational>> rows)
    : SymMatrix(Matrix(rows)) {}

Rational SymMatrix::form(const Vector& x, const Vector& y) const {
  if (x.size() != dimension() || y.size() != dimension()) {
    throw DimensionMismatch("bilinear form: vector length " + std::to_string(x.size()) +
                            " vs dimension " + std::to_string(dimension()));
  }
  Rational s = 0;
  for (std::size_t i = 0; i < dimension(); ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < dimension(); ++j) {
      if (y[j].is_zero() || m_(i, j).is_zero()) continue;
      s += x[i] * m_(i, j) * y[j];
    }
  }
  return s;
}

SymMatrix SymMatrix::restrict_to(const std::vector<std::size_t>& indices) const {
  Matrix sub(indices.size(), indices.size());
  for (std::size_t a = 0; a < indices.size(); ++a)
    for (std::size_t b = 0; b < indices.size(); ++b) sub(a, b) = m_(indices[a], indices[b]);
  return SymMatrix(std::move(sub));
}

SymMatrix SymMatrix::congruent(const Matrix& s) const {
  return SymMatrix(s.transpose() * m_ * s);
}

AntisymMatrix::AntisymMatrix(Matrix m) : m_(std::move(m)) {
  if (!m_.is_square()) throw DimensionMismatch("antisymmetric matrix must be square");
  for (std::size_t i = 0; i < m_.rows(); ++i)
    for (std::size_t j = i; j < m_.cols(); ++j)
      if (m_(i, j) != -m_(j, i)) {
        throw InvalidArgument("matrix is not antisymmetric at (" + std::to_string(i) + "," +
                              std::to_string(j) + ")");
      }
}

AntisymMatrix::AntisymMatrix(std::initializer_list<std::initializer_list<Rational>> rows)
    : AntisymMatrix(Matrix(rows)) {}

}  // namespace asymcoh
