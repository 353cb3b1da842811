#include <asymcoh/core/parallel.hpp>
#include <asymcoh/error.hpp>
#include <asymcoh/flag/flag.hpp>

namespace asymcoh::flag {
namespace {

void require_rank(const RootSystem& rs, const Weight& w) {
  if (w.rank() != rs.rank()) {
    throw DimensionMismatch("weight has " + std::to_string(w.rank()) + " coordinates, " + rs.label() +
                            " has rank " + std::to_string(rs.rank()));
  }
}

void require_integral(const Weight& w) {
  for (const auto& c : w.coords())
    if (!is_integer(c)) throw InvalidArgument("weight " + w.to_string() + " is not integral");
}

Weight shifted_by_rho(const RootSystem& rs, const Weight& lambda) {
  Weight mu = lambda;
  for (std::size_t i = 0; i < rs.rank(); ++i) mu[i] += 1;
  return mu;
}

std::optional<unsigned> count_negative_pairings(const RootSystem& rs, const Vector& w) {
  unsigned negatives = 0;
  for (std::size_t v = 0; v < rs.num_positive_roots(); ++v) {
    const int s = sign(rs.coroot_pairing(w, v));
    if (s == 0) return std::nullopt;
    if (s < 0) ++negatives;
  }
  return negatives;
}

}  // namespace

std::optional<unsigned> bwb_index(const RootSystem& rs, const Weight& lambda) {
  require_rank(rs, lambda);
  require_integral(lambda);
  return count_negative_pairings(rs, shifted_by_rho(rs, lambda).coords());
}

std::pair<Weight, unsigned> dominant_conjugate(const RootSystem& rs, const Weight& mu) {
  require_rank(rs, mu);
  Weight w = mu;
  unsigned steps = 0;
  const std::size_t r = rs.rank();
  while (true) {
    std::size_t i = 0;
    while (i < r && w[i].sign() >= 0) ++i;
    if (i == r) break;
    // s_i(w) = w - <w, alpha_i^vee> alpha_i, and <w, alpha_i^vee> = w_i.
    const Rational wi = w[i];
    for (std::size_t k = 0; k < r; ++k) w[k] -= wi * rs.cartan()(k, i);
    ++steps;
  }
  return {w, steps};
}

Integer weyl_dim(const RootSystem& rs, const Weight& lambda) {
  require_rank(rs, lambda);
  require_integral(lambda);
  for (const auto& c : lambda.coords())
    if (c.sign() < 0) throw NotDominant("weight " + lambda.to_string() + " is not dominant");
  const Weight mu = shifted_by_rho(rs, lambda);
  const Vector rho = rs.rho();
  Rational product = 1;
  for (std::size_t v = 0; v < rs.num_positive_roots(); ++v) {
    product *= rs.coroot_pairing(mu.coords(), v) / rs.coroot_pairing(rho, v);
  }
  if (!is_integer(product)) {
    throw IllConditionedModel("Weyl product " + to_string(product) + " is not an integer");
  }
  return boost::multiprecision::numerator(product);
}

std::vector<std::pair<unsigned, Integer>> bwb_cohomology(const RootSystem& rs, const Weight& lambda) {
  const auto index = bwb_index(rs, lambda);
  if (!index) return {};
  const auto [dominant, length] = dominant_conjugate(rs, shifted_by_rho(rs, lambda));
  if (length != *index) {
    throw IllConditionedModel("reflection length " + std::to_string(length) +
                              " disagrees with index " + std::to_string(*index));
  }
  Weight highest = dominant;
  for (std::size_t i = 0; i < rs.rank(); ++i) highest[i] -= 1;
  return {{*index, weyl_dim(rs, highest)}};
}

std::optional<unsigned> asymptotic_index(const RootSystem& rs, const Weight& alpha) {
  require_rank(rs, alpha);
  return count_negative_pairings(rs, alpha.coords());
}

Rational top_self_intersection(const RootSystem& rs, const Weight& alpha) {
  require_rank(rs, alpha);
  const Vector rho = rs.rho();
  Rational product(factorial(rs.num_positive_roots()));
  for (std::size_t v = 0; v < rs.num_positive_roots(); ++v) {
    product *= rs.coroot_pairing(alpha.coords(), v) / rs.coroot_pairing(rho, v);
  }
  return product;
}

CohomologyVector flag_asym_h(const RootSystem& rs, const Weight& alpha) {
  CohomologyVector h = CohomologyVector::zeros(rs.num_positive_roots());
  const auto index = asymptotic_index(rs, alpha);
  if (!index) return h;
  h.values[*index] = abs(top_self_intersection(rs, alpha));
  return h;
}

std::vector<ChamberDescriptor> enumerate_chambers(const RootSystem& rs) {
  const std::size_t n = rs.num_positive_roots();
  if (n > kMaxEnumeratedRoots) {
    throw UnsupportedType(rs.label() + " has " + std::to_string(n) +
                          " positive roots; sign-vector enumeration is limited to " +
                          std::to_string(kMaxEnumeratedRoots));
  }
  const std::size_t total = std::size_t{1} << n;
  // Mask bit (n-1-i) set means root i is negative, so increasing masks are
  // lexicographic in the sign vector with + < -.
  auto candidates = parallel_map(total, [&](std::size_t mask) {
    ChamberDescriptor c;
    c.signs.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      const bool negative = (mask >> (n - 1 - i)) & 1u;
      c.signs[i] = negative ? Sign::Negative : Sign::Positive;
      if (negative) ++c.index;
    }
    if (auto w = open_sign_witness(rs.coroot_normals(), c.signs)) {
      c.nonempty = true;
      c.witness = std::move(*w);
    }
    return c;
  });
  std::vector<ChamberDescriptor> out;
  for (auto& c : candidates)
    if (c.nonempty) out.push_back(std::move(c));
  return out;
}

std::string sign_string(const std::vector<Sign>& signs) {
  std::string s;
  for (Sign x : signs) s += x == Sign::Positive ? '+' : '-';
  return s;
}

}  // namespace asymcoh::flag
