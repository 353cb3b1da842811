#pragma once

#include <asymcoh/exactlin/linalg.hpp>

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace asymcoh::flag {

/// A finite reduced root system given by its simple roots.
///
/// Positive roots are integer vectors in the simple-root basis. Weights are
/// written in the fundamental-weight basis, so <lambda, alpha_j^vee> = lambda_j and
/// every coroot pairing is a rational dot product with `coroot_normal(v)`.
class RootSystem {
 public:
  /// Types A (r>=1), B (r>=2), C (r>=2), D (r>=3), E (6,7,8), F4, G2.
  /// Throws UnsupportedType.
  static RootSystem build(char type, unsigned rank);
  /// Parses tokens such as "A2", "G2", "E8".
  static RootSystem parse(std::string_view token);

  const std::string& label() const { return label_; }
  unsigned rank() const { return rank_; }
  /// n = |positive roots| = dim G/B.
  unsigned num_positive_roots() const { return static_cast<unsigned>(positive_roots_.size()); }

  const std::vector<std::vector<long>>& positive_roots() const { return positive_roots_; }
  /// (alpha_i, alpha_j) of the simple roots.
  const SymMatrix& gram() const { return gram_; }
  /// cartan(i, j) = <alpha_j, alpha_i^vee>.
  const Matrix& cartan() const { return cartan_; }
  /// Fundamental weights in the simple-root basis (rows).
  const std::vector<Vector>& fundamental_weights() const { return fundamental_weights_; }
  /// rho = half the sum of the positive roots, in the simple-root basis.
  const Vector& rho_in_roots() const { return rho_in_roots_; }
  /// rho in the fundamental-weight basis, i.e. (1, ..., 1).
  Vector rho() const { return Vector(rank_, Rational(1)); }

  /// (v, w) for vectors in the simple-root basis.
  Rational inner(const Vector& v, const Vector& w) const { return gram_.form(v, w); }
  /// Linear functional lambda -> <lambda, v^vee> on fundamental-weight coordinates.
  const Vector& coroot_normal(std::size_t root) const { return coroot_normals_[root]; }
  const std::vector<Vector>& coroot_normals() const { return coroot_normals_; }
  Rational coroot_pairing(const Vector& weight, std::size_t root) const;
  /// Simple root alpha_i in the fundamental-weight basis (row i of the transposed Cartan matrix).
  Vector simple_root_as_weight(std::size_t i) const;

 private:
  RootSystem(std::string label, SymMatrix gram);

  std::string label_;
  unsigned rank_ = 0;
  SymMatrix gram_;
  Matrix cartan_;
  std::vector<std::vector<long>> positive_roots_;
  std::vector<Vector> fundamental_weights_;
  Vector rho_in_roots_;
  std::vector<Vector> coroot_normals_;
};

}  // namespace asymcoh::flag
