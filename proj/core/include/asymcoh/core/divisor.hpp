#pragma once

#include <asymcoh/exactlin/rational.hpp>

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace asymcoh {

/// A class in N^1(X)_Q written in the owning model's fixed ordered basis.
class DivisorClass {
 public:
  DivisorClass() = default;
  explicit DivisorClass(Vector coords) : coords_(std::move(coords)) {}
  DivisorClass(std::initializer_list<Rational> coords) : coords_(coords) {}
  static DivisorClass zero(std::size_t rank) { return DivisorClass(Vector(rank, Rational(0))); }

  std::size_t rank() const { return coords_.size(); }
  const Vector& coords() const { return coords_; }
  const Rational& operator[](std::size_t i) const { return coords_[i]; }
  Rational& operator[](std::size_t i) { return coords_[i]; }
  bool is_zero() const;

  DivisorClass& operator+=(const DivisorClass& o);
  DivisorClass& operator-=(const DivisorClass& o);
  friend DivisorClass operator+(DivisorClass a, const DivisorClass& b) { return a += b; }
  friend DivisorClass operator-(DivisorClass a, const DivisorClass& b) { return a -= b; }
  friend DivisorClass operator-(DivisorClass a);
  friend DivisorClass operator*(const Rational& s, DivisorClass a);
  friend bool operator==(const DivisorClass&, const DivisorClass&) = default;

  /// "(1, -3/2, 0)"
  std::string to_string() const;

 private:
  Vector coords_;
};

/// (h^0, ..., h^n) of nonnegative rationals.
struct CohomologyVector {
  Vector values;

  std::size_t size() const { return values.size(); }
  const Rational& operator[](std::size_t i) const { return values[i]; }
  bool all_nonnegative() const;
  bool is_zero() const;
  /// Number of nonzero entries.
  std::size_t support_size() const;
  /// h^0 - h^1 + h^2 - ...
  Rational alternating_sum() const;
  CohomologyVector scaled(const Rational& s) const;
  std::string to_string() const;

  static CohomologyVector zeros(std::size_t degree) {
    return CohomologyVector{Vector(degree + 1, Rational(0))};
  }
  friend bool operator==(const CohomologyVector&, const CohomologyVector&) = default;
};

/// Max-norm with respect to a labelled basis.
class NormedBasis {
 public:
  explicit NormedBasis(std::vector<std::string> labels) : labels_(std::move(labels)) {}

  std::size_t rank() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  Rational norm(const DivisorClass& xi) const;

 private:
  std::vector<std::string> labels_;
};

/// max |coord_i|. Throws DimensionMismatch.
Rational max_norm(const NormedBasis& basis, const DivisorClass& xi);

}  // namespace asymcoh
