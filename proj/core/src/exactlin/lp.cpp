#include <asymcoh/error.hpp>
#include <asymcoh/exactlin/lp.hpp>

#include <limits>

namespace asymcoh {
namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

// Tableau for maximize c.x s.t. rows * x = rhs, with an explicit basis.
// The last row holds reduced costs (c_j - c_B B^{-1} A_j) and -objective in the rhs slot.
class Tableau {
 public:
  Tableau(std::size_t rows, std::size_t vars) : t_(rows + 1, vars + 1), basis_(rows, kNone) {}

  Rational& at(std::size_t i, std::size_t j) { return t_(i, j); }
  std::size_t rows() const { return basis_.size(); }
  std::size_t vars() const { return t_.cols() - 1; }
  std::size_t rhs() const { return t_.cols() - 1; }
  std::size_t cost_row() const { return basis_.size(); }
  std::vector<std::size_t>& basis() { return basis_; }

  void set_costs(const Vector& c) {
    const std::size_t z = cost_row();
    for (std::size_t j = 0; j <= vars(); ++j) t_(z, j) = j < c.size() ? c[j] : Rational(0);
    for (std::size_t i = 0; i < rows(); ++i) {
      const std::size_t b = basis_[i];
      const Rational cb = b < c.size() ? c[b] : Rational(0);
      if (cb.is_zero()) continue;
      for (std::size_t j = 0; j <= vars(); ++j) t_(z, j) -= cb * t_(i, j);
    }
  }

  void pivot(std::size_t r, std::size_t col) {
    const Rational inv = 1 / t_(r, col);
    for (std::size_t j = 0; j <= vars(); ++j) t_(r, j) *= inv;
    for (std::size_t i = 0; i <= rows(); ++i) {
      if (i == r || t_(i, col).is_zero()) continue;
      const Rational f = t_(i, col);
      for (std::size_t j = 0; j <= vars(); ++j) {
        if (!t_(r, j).is_zero()) t_(i, j) -= f * t_(r, j);
      }
    }
    basis_[r] = col;
  }

  // Runs Bland's rule over columns [0, allowed). Returns false when unbounded.
  bool optimize(std::size_t allowed) {
    const std::size_t z = cost_row();
    while (true) {
      std::size_t enter = kNone;
      for (std::size_t j = 0; j < allowed; ++j) {
        if (t_(z, j).sign() > 0) {
          enter = j;
          break;
        }
      }
      if (enter == kNone) return true;
      std::size_t leave = kNone;
      Rational best;
      for (std::size_t i = 0; i < rows(); ++i) {
        if (t_(i, enter).sign() <= 0) continue;
        const Rational ratio = t_(i, rhs()) / t_(i, enter);
        if (leave == kNone || ratio < best || (ratio == best && basis_[i] < basis_[leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave == kNone) return false;
      pivot(leave, enter);
    }
  }

  Rational objective() { return -t_(cost_row(), rhs()); }

  void drop_row(std::size_t r) {
    Matrix next(t_.rows() - 1, t_.cols());
    for (std::size_t i = 0, k = 0; i < t_.rows(); ++i) {
      if (i == r) continue;
      for (std::size_t j = 0; j < t_.cols(); ++j) next(k, j) = t_(i, j);
      ++k;
    }
    t_ = std::move(next);
    basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(r));
  }

 private:
  Matrix t_;
  std::vector<std::size_t> basis_;
};

}  // namespace

LpResult solve_standard_lp(const Matrix& a, const Vector& b, const Vector& c) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  if (b.size() != m || c.size() != n) throw DimensionMismatch("LP shape mismatch");

  // Phase 1: artificials n..n+m-1, maximize -sum(artificials).
  Tableau tab(m, n + m);
  for (std::size_t i = 0; i < m; ++i) {
    const bool flip = b[i].sign() < 0;
    for (std::size_t j = 0; j < n; ++j) tab.at(i, j) = flip ? Rational(-a(i, j)) : a(i, j);
    tab.at(i, n + i) = 1;
    tab.at(i, n + m) = flip ? Rational(-b[i]) : b[i];
    tab.basis()[i] = n + i;
  }
  Vector phase1(n + m, Rational(0));
  for (std::size_t i = 0; i < m; ++i) phase1[n + i] = -1;
  tab.set_costs(phase1);
  tab.optimize(n + m);

  LpResult result;
  if (tab.objective().sign() < 0) {
    result.status = LpStatus::Infeasible;
    return result;
  }

  // Drive remaining (zero-valued) artificials out of the basis.
  for (std::size_t i = 0; i < tab.rows();) {
    if (tab.basis()[i] < n) {
      ++i;
      continue;
    }
    std::size_t col = kNone;
    for (std::size_t j = 0; j < n; ++j) {
      if (!tab.at(i, j).is_zero()) {
        col = j;
        break;
      }
    }
    if (col == kNone) {
      tab.drop_row(i);  // redundant constraint
    } else {
      tab.pivot(i, col);
      ++i;
    }
  }

  Vector phase2(n + m, Rational(0));
  for (std::size_t j = 0; j < n; ++j) phase2[j] = c[j];
  tab.set_costs(phase2);
  if (!tab.optimize(n)) {
    result.status = LpStatus::Unbounded;
    return result;
  }
  result.status = LpStatus::Optimal;
  result.objective = tab.objective();
  result.x.assign(n, Rational(0));
  for (std::size_t i = 0; i < tab.rows(); ++i) {
    if (tab.basis()[i] < n) result.x[tab.basis()[i]] = tab.at(i, tab.rhs());
  }
  return result;
}

std::optional<Vector> cone_coefficients(std::span<const Vector> generators, const Vector& point) {
  if (generators.empty()) throw InvalidArgument("cone_member: no generators");
  const std::size_t d = point.size();
  for (const auto& g : generators) {
    if (g.size() != d) throw DimensionMismatch("cone_member: generator length mismatch");
  }
  Matrix a(d, generators.size());
  for (std::size_t j = 0; j < generators.size(); ++j)
    for (std::size_t i = 0; i < d; ++i) a(i, j) = generators[j][i];
  const LpResult r = solve_standard_lp(a, point, Vector(generators.size(), Rational(0)));
  if (r.status != LpStatus::Optimal) return std::nullopt;
  return r.x;
}

bool cone_member(std::span<const Vector> generators, const Vector& point) {
  return cone_coefficients(generators, point).has_value();
}

std::optional<Vector> strict_feasible_point(std::span<const Vector> equalities,
                                            std::span<const Vector> strict) {
  std::size_t d = 0;
  if (!strict.empty()) d = strict.front().size();
  else if (!equalities.empty()) d = equalities.front().size();
  for (const auto& v : equalities)
    if (v.size() != d) throw DimensionMismatch("strict_feasible_point: length mismatch");
  for (const auto& v : strict)
    if (v.size() != d) throw DimensionMismatch("strict_feasible_point: length mismatch");
  if (strict.empty()) return Vector(d, Rational(0));

  // Variables: x+ (d), x- (d), t, one surplus per strict row, cap slack.
  const std::size_t k = strict.size();
  const std::size_t t = 2 * d;
  const std::size_t vars = 2 * d + 1 + k + 1;
  const std::size_t rows = equalities.size() + k + 1;
  Matrix a(rows, vars);
  Vector b(rows, Rational(0));
  std::size_t r = 0;
  for (const auto& e : equalities) {
    for (std::size_t i = 0; i < d; ++i) {
      a(r, i) = e[i];
      a(r, d + i) = -e[i];
    }
    ++r;
  }
  for (std::size_t s = 0; s < k; ++s) {
    for (std::size_t i = 0; i < d; ++i) {
      a(r, i) = strict[s][i];
      a(r, d + i) = -strict[s][i];
    }
    a(r, t) = -1;
    a(r, t + 1 + s) = -1;
    ++r;
  }
  a(r, t) = 1;
  a(r, vars - 1) = 1;
  b[r] = 1;

  Vector c(vars, Rational(0));
  c[t] = 1;
  const LpResult res = solve_standard_lp(a, b, c);
  if (res.status != LpStatus::Optimal || res.objective.sign() <= 0) return std::nullopt;
  Vector x(d);
  for (std::size_t i = 0; i < d; ++i) x[i] = res.x[i] - res.x[d + i];
  return x;
}

std::optional<Vector> open_sign_witness(std::span<const Vector> normals,
                                        std::span<const Sign> signs) {
  if (normals.empty()) throw InvalidArgument("open_sign_feasible: no normals");
  if (normals.size() != signs.size()) throw DimensionMismatch("open_sign_feasible: signs length");
  std::vector<Vector> oriented;
  oriented.reserve(normals.size());
  for (std::size_t i = 0; i < normals.size(); ++i) {
    Vector v = normals[i];
    if (signs[i] == Sign::Negative)
      for (auto& x : v) x = -x;
    oriented.push_back(std::move(v));
  }
  return strict_feasible_point({}, oriented);
}

bool open_sign_feasible(std::span<const Vector> normals, std::span<const Sign> signs) {
  return open_sign_witness(normals, signs).has_value();
}

}  // namespace asymcoh
