#include <asymcoh/error.hpp>
#include <asymcoh/exactlin/linalg.hpp>

#include <utility>

namespace asymcoh {
namespace {

void swap_symmetric(Matrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  const std::size_t n = m.rows();
  for (std::size_t j = 0; j < n; ++j) std::swap(m(a, j), m(b, j));
  for (std::size_t i = 0; i < n; ++i) std::swap(m(i, a), m(i, b));
}

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(Matrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t p = row;
    while (p < m.rows() && m(p, col).is_zero()) ++p;
    if (p == m.rows()) continue;
    if (p != row)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(row, j));
    const Rational inv = 1 / m(row, col);
    for (std::size_t j = col; j < m.cols(); ++j) m(row, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == row || m(i, col).is_zero()) continue;
      const Rational f = m(i, col);
      for (std::size_t j = col; j < m.cols(); ++j) m(i, j) -= f * m(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

Signature signature(const SymMatrix& sym) {
  Matrix m = sym.matrix();
  const std::size_t n = m.rows();
  Signature sig;
  std::size_t k = 0;
  while (k < n) {
    std::size_t p = k;
    while (p < n && m(p, p).is_zero()) ++p;
    if (p == n) {
      // All remaining diagonal entries vanish; look for an off-diagonal entry.
      std::size_t pi = n, pj = n;
      for (std::size_t i = k; i < n && pi == n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
          if (!m(i, j).is_zero()) {
            pi = i;
            pj = j;
            break;
          }
      if (pi == n) break;
      for (std::size_t j = 0; j < n; ++j) m(pi, j) += m(pj, j);
      for (std::size_t i = 0; i < n; ++i) m(i, pi) += m(i, pj);
      p = pi;
    }
    swap_symmetric(m, k, p);
    const Rational d = m(k, k);
    if (d.sign() > 0) ++sig.positives; else ++sig.negatives;
    for (std::size_t i = k + 1; i < n; ++i) {
      if (m(i, k).is_zero()) continue;
      const Rational f = m(i, k) / d;
      for (std::size_t j = k + 1; j < n; ++j) m(i, j) -= f * m(k, j);
      m(i, k) = 0;
    }
    for (std::size_t j = k + 1; j < n; ++j) m(k, j) = 0;
    ++k;
  }
  sig.zeros = n - sig.positives - sig.negatives;
  return sig;
}

bool is_negative_definite(const SymMatrix& m) {
  const Signature s = signature(m);
  return s.negatives == m.dimension();
}

Vector solve(const Matrix& m, const Vector& rhs) {
  if (!m.is_square()) throw DimensionMismatch("solve: matrix must be square");
  if (rhs.size() != m.rows()) throw DimensionMismatch("solve: rhs length mismatch");
  const std::size_t n = m.rows();
  Matrix aug(n, n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n) = rhs[i];
  }
  const auto pivots = rref(aug);
  if (pivots.size() < n || pivots.back() >= n) throw SingularMatrix();
  Vector x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = aug(i, n);
  return x;
}

Vector solve_symmetric(const SymMatrix& m, const Vector& rhs) { return solve(m.matrix(), rhs); }

Rational determinant(const Matrix& input) {
  if (!input.is_square()) throw DimensionMismatch("determinant of non-square matrix");
  Matrix m = input;
  const std::size_t n = m.rows();
  Rational det = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && m(p, k).is_zero()) ++p;
    if (p == n) return 0;
    if (p != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(k, j));
      det = -det;
    }
    det *= m(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      if (m(i, k).is_zero()) continue;
      const Rational f = m(i, k) / m(k, k);
      for (std::size_t j = k; j < n; ++j) m(i, j) -= f * m(k, j);
    }
  }
  return det;
}

std::size_t rank(const Matrix& m) {
  Matrix copy = m;
  return rref(copy).size();
}

std::vector<Vector> nullspace(const Matrix& input) {
  Matrix m = input;
  const auto pivots = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector v(m.cols(), Rational(0));
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

Rational pfaffian(const AntisymMatrix& e) {
  const std::size_t n = e.dimension();
  if (n % 2 != 0) throw OddDimension();
  Matrix a = e.matrix();
  Rational pf = 1;
  // Active block is [k, n); each step removes two indices.
  for (std::size_t k = 0; k < n; k += 2) {
    std::size_t p = k + 1;
    while (p < n && a(k, p).is_zero()) ++p;
    if (p == n) return 0;
    if (p != k + 1) {
      swap_symmetric(a, k + 1, p);
      pf = -pf;
    }
    const Rational b = a(k, k + 1);
    pf *= b;
    // S = D + C^T B^{-1} C with B^{-1} = [[0, -1/b], [1/b, 0]].
    for (std::size_t i = k + 2; i < n; ++i) {
      for (std::size_t j = k + 2; j < n; ++j) {
        const Rational& c0i = a(k, i);
        const Rational& c1i = a(k + 1, i);
        const Rational& c0j = a(k, j);
        const Rational& c1j = a(k + 1, j);
        a(i, j) += (c1i * c0j - c0i * c1j) / b;
      }
    }
  }
  return pf;
}

}  // namespace asymcoh
