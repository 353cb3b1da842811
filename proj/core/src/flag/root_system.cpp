#include <asymcoh/error.hpp>
#include <asymcoh/flag/root_system.hpp>

#include <algorithm>
#include <charconv>
#include <set>

namespace asymcoh::flag {
namespace {

void link(Matrix& g, std::size_t i, std::size_t j, const Rational& value) {
  g(i, j) = value;
  g(j, i) = value;
}

// Gram matrix of the simple roots, Bourbaki numbering, long roots of squared length 2
// except for C_r (long 4) and G2 (long 6).
Matrix simple_root_gram(char type, unsigned r) {
  Matrix g(r, r);
  switch (type) {
    case 'A':
      if (r < 1) break;
      for (unsigned i = 0; i < r; ++i) g(i, i) = 2;
      for (unsigned i = 0; i + 1 < r; ++i) link(g, i, i + 1, -1);
      return g;
    case 'B':
      if (r < 2) break;
      for (unsigned i = 0; i < r; ++i) g(i, i) = 2;
      g(r - 1, r - 1) = 1;
      for (unsigned i = 0; i + 1 < r; ++i) link(g, i, i + 1, -1);
      return g;
    case 'C':
      if (r < 2) break;
      for (unsigned i = 0; i < r; ++i) g(i, i) = 2;
      g(r - 1, r - 1) = 4;
      for (unsigned i = 0; i + 2 < r; ++i) link(g, i, i + 1, -1);
      link(g, r - 2, r - 1, -2);
      return g;
    case 'D':
      if (r < 3) break;
      for (unsigned i = 0; i < r; ++i) g(i, i) = 2;
      for (unsigned i = 0; i + 2 < r; ++i) link(g, i, i + 1, -1);
      link(g, r - 3, r - 1, -1);
      return g;
    case 'E': {
      if (r < 6 || r > 8) break;
      for (unsigned i = 0; i < r; ++i) g(i, i) = 2;
      link(g, 0, 2, -1);
      link(g, 1, 3, -1);
      for (unsigned i = 2; i + 1 < r; ++i) link(g, i, i + 1, -1);
      return g;
    }
    case 'F':
      if (r != 4) break;
      g(0, 0) = 2;
      g(1, 1) = 2;
      g(2, 2) = 1;
      g(3, 3) = 1;
      link(g, 0, 1, -1);
      link(g, 1, 2, -1);
      link(g, 2, 3, Rational(-1, 2));
      return g;
    case 'G':
      if (r != 2) break;
      g(0, 0) = 2;
      g(1, 1) = 6;
      link(g, 0, 1, -3);
      return g;
    default:
      break;
  }
  throw UnsupportedType(std::string("unsupported root system ") + type + std::to_string(r));
}

}  // namespace

RootSystem RootSystem::build(char type, unsigned rank) {
  return RootSystem(std::string(1, type) + std::to_string(rank), SymMatrix(simple_root_gram(type, rank)));
}

RootSystem RootSystem::parse(std::string_view token) {
  if (token.size() < 2) throw UnsupportedType("malformed root system token '" + std::string(token) + "'");
  unsigned rank = 0;
  const auto digits = token.substr(1);
  const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), rank);
  if (ec != std::errc() || ptr != digits.data() + digits.size()) {
    throw UnsupportedType("malformed root system token '" + std::string(token) + "'");
  }
  return build(token.front(), rank);
}

RootSystem::RootSystem(std::string label, SymMatrix gram)
    : label_(std::move(label)), rank_(static_cast<unsigned>(gram.dimension())), gram_(std::move(gram)) {
  const unsigned r = rank_;
  cartan_ = Matrix(r, r);
  for (unsigned i = 0; i < r; ++i)
    for (unsigned j = 0; j < r; ++j) cartan_(i, j) = 2 * gram_(i, j) / gram_(i, i);

  // Positive roots by height via root strings: for a positive root beta and simple
  // alpha_i, beta + alpha_i is a root iff q - <beta, alpha_i^vee> > 0 where q is the
  // largest k with beta - k alpha_i a root.
  std::set<std::vector<long>> roots;
  std::vector<std::vector<long>> layer;
  for (unsigned i = 0; i < r; ++i) {
    std::vector<long> e(r, 0);
    e[i] = 1;
    roots.insert(e);
    layer.push_back(e);
  }
  while (!layer.empty()) {
    std::vector<std::vector<long>> next;
    for (const auto& beta : layer) {
      for (unsigned i = 0; i < r; ++i) {
        Rational pairing = 0;
        for (unsigned j = 0; j < r; ++j) pairing += beta[j] * cartan_(i, j);
        long q = 0;
        auto down = beta;
        while (true) {
          down[i] -= 1;
          if (!roots.count(down)) break;
          ++q;
        }
        if (Rational(q) - pairing > 0) {
          auto up = beta;
          up[i] += 1;
          if (roots.insert(up).second) next.push_back(up);
        }
      }
    }
    layer = std::move(next);
  }
  positive_roots_.assign(roots.begin(), roots.end());
  std::stable_sort(positive_roots_.begin(), positive_roots_.end(), [](const auto& a, const auto& b) {
    long ha = 0, hb = 0;
    for (long x : a) ha += x;
    for (long x : b) hb += x;
    if (ha != hb) return ha < hb;
    return a > b;  // within a height, alpha_1-heavy roots first
  });

  rho_in_roots_.assign(r, Rational(0));
  for (const auto& v : positive_roots_)
    for (unsigned j = 0; j < r; ++j) rho_in_roots_[j] += Rational(v[j], 2);

  // omega_i = sum_j W_ij alpha_j with W * cartan^T = I.
  fundamental_weights_.clear();
  const Matrix cartan_rows = cartan_;
  for (unsigned i = 0; i < r; ++i) {
    Vector e(r, Rational(0));
    e[i] = 1;
    // Row i of W solves cartan * w = e_i.
    fundamental_weights_.push_back(solve(cartan_rows, e));
  }

  for (const auto& v : positive_roots_) {
    Vector vr(v.begin(), v.end());
    const Rational len = inner(vr, vr);
    Vector normal(r);
    for (unsigned j = 0; j < r; ++j) normal[j] = Rational(v[j]) * gram_(j, j) / len;
    coroot_normals_.push_back(std::move(normal));
  }
}

Rational RootSystem::coroot_pairing(const Vector& weight, std::size_t root) const {
  return dot(weight, coroot_normals_.at(root));
}

Vector RootSystem::simple_root_as_weight(std::size_t i) const {
  Vector w(rank_);
  for (unsigned k = 0; k < rank_; ++k) w[k] = cartan_(k, i);
  return w;
}

}  // namespace asymcoh::flag
