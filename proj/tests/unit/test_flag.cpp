#include <asymcoh/core/harness.hpp>
#include <asymcoh/core/sampling.hpp>
#include <asymcoh/core/suites.hpp>
#include <asymcoh/error.hpp>
#include <asymcoh/flag/flag.hpp>
#include <asymcoh/flag/flag_variety.hpp>

#include <doctest.h>

#include <algorithm>
#include <random>

using namespace asymcoh;
using namespace asymcoh::flag;

namespace {

Weight weight(std::initializer_list<Rational> c) { return Weight(c); }

Weight negate_shifted(const Weight& lambda) {
  // -lambda - 2 rho
  Weight out = -lambda;
  for (std::size_t i = 0; i < out.rank(); ++i) out[i] -= 2;
  return out;
}

}  // namespace

TEST_CASE("root system sizes") {
  const std::vector<std::pair<std::string, unsigned>> expected{
      {"A1", 1}, {"A2", 3}, {"A3", 6}, {"B2", 4}, {"B3", 9}, {"C3", 9}, {"D4", 12},
      {"G2", 6}, {"F4", 24}, {"E6", 36}, {"E7", 63}, {"E8", 120}};
  for (const auto& [token, count] : expected) {
    const RootSystem rs = RootSystem::parse(token);
    CHECK_MESSAGE(rs.num_positive_roots() == count, token);
    CHECK(rs.label() == token);
  }
  CHECK_THROWS_AS(RootSystem::parse("A0"), UnsupportedType);
  CHECK_THROWS_AS(RootSystem::parse("B1"), UnsupportedType);
  CHECK_THROWS_AS(RootSystem::parse("D2"), UnsupportedType);
  CHECK_THROWS_AS(RootSystem::parse("E9"), UnsupportedType);
  CHECK_THROWS_AS(RootSystem::parse("G3"), UnsupportedType);
  CHECK_THROWS_AS(RootSystem::parse("X2"), UnsupportedType);
  CHECK_THROWS_AS(RootSystem::parse("A"), UnsupportedType);
}

TEST_CASE("A2 roots, Cartan matrix and rho") {
  const RootSystem rs = RootSystem::parse("A2");
  CHECK(rs.positive_roots() == std::vector<std::vector<long>>{{1, 0}, {0, 1}, {1, 1}});
  CHECK(rs.cartan() == Matrix{{2, -1}, {-1, 2}});
  CHECK(rs.coroot_normal(2) == Vector{1, 1});
  CHECK(rs.simple_root_as_weight(0) == Vector{2, -1});
}

TEST_CASE("rho is the sum of the fundamental weights") {
  for (const char* token : {"A3", "B3", "C3", "D4", "G2", "F4", "E6"}) {
    const RootSystem rs = RootSystem::parse(token);
    Vector sum(rs.rank(), Rational(0));
    for (const auto& w : rs.fundamental_weights())
      for (std::size_t j = 0; j < rs.rank(); ++j) sum[j] += w[j];
    CHECK_MESSAGE(sum == rs.rho_in_roots(), token);
    for (std::size_t v = 0; v < rs.num_positive_roots(); ++v) CHECK(rs.coroot_pairing(rs.rho(), v) > 0);
  }
}

TEST_CASE("Weyl dimension formula") {
  const RootSystem a2 = RootSystem::parse("A2");
  CHECK(weyl_dim(a2, weight({0, 0})) == 1);
  CHECK(weyl_dim(a2, weight({1, 0})) == 3);
  CHECK(weyl_dim(a2, weight({1, 1})) == 8);
  CHECK(weyl_dim(a2, weight({2, 0})) == 6);
  CHECK(weyl_dim(a2, weight({3, 0})) == 10);
  const RootSystem b2 = RootSystem::parse("B2");
  CHECK(weyl_dim(b2, weight({1, 0})) == 5);
  CHECK(weyl_dim(b2, weight({0, 1})) == 4);
  const RootSystem g2 = RootSystem::parse("G2");
  CHECK(weyl_dim(g2, weight({1, 0})) == 7);
  CHECK(weyl_dim(g2, weight({0, 1})) == 14);
  const RootSystem e8 = RootSystem::parse("E8");
  CHECK(weyl_dim(e8, weight({0, 0, 0, 0, 0, 0, 0, 1})) == 248);
  CHECK_THROWS_AS(weyl_dim(a2, weight({-1, 0})), NotDominant);
}

TEST_CASE("Borel-Weil-Bott on A2") {
  const RootSystem rs = RootSystem::parse("A2");
  CHECK(bwb_index(rs, weight({0, 0})) == 0u);
  CHECK(bwb_index(rs, weight({-4, 1})) == 2u);
  CHECK_FALSE(bwb_index(rs, weight({-1, 0})).has_value());
  CHECK(bwb_index(rs, weight({-2, -2})) == 3u);
  CHECK_THROWS_AS(bwb_index(rs, weight({Rational(1, 2), 0})), InvalidArgument);
  const auto top = bwb_cohomology(rs, weight({-2, -2}));
  REQUIRE(top.size() == 1);
  CHECK(top[0].first == 3);
  CHECK(top[0].second == 1);
  CHECK(bwb_cohomology(rs, weight({-1, 0})).empty());
  const auto h0 = bwb_cohomology(rs, weight({1, 1}));
  REQUIRE(h0.size() == 1);
  CHECK(h0[0] == std::pair<unsigned, Integer>{0, 8});
}

TEST_CASE("dominant conjugate length equals the index, and Serre duality holds") {
  std::mt19937_64 rng(3);
  for (const char* token : {"A2", "B2", "G2", "A3", "C3"}) {
    const RootSystem rs = RootSystem::parse(token);
    for (int trial = 0; trial < 60; ++trial) {
      Weight lambda = Weight::zero(rs.rank());
      for (std::size_t i = 0; i < rs.rank(); ++i) lambda[i] = static_cast<long>(rng() % 11) - 5;
      Weight shifted = lambda;
      for (std::size_t i = 0; i < rs.rank(); ++i) shifted[i] += 1;
      const auto index = bwb_index(rs, lambda);
      const auto dual = bwb_index(rs, negate_shifted(lambda));
      if (!index) {
        CHECK_FALSE(dual.has_value());
        continue;
      }
      const auto [dominant, length] = dominant_conjugate(rs, shifted);
      CHECK(length == *index);
      CHECK(*dual == rs.num_positive_roots() - *index);
      const auto h = bwb_cohomology(rs, lambda);
      const auto hd = bwb_cohomology(rs, negate_shifted(lambda));
      REQUIRE(h.size() == 1);
      REQUIRE(hd.size() == 1);
      CHECK(h[0].second == hd[0].second);
      CHECK(h[0].first + hd[0].first == rs.num_positive_roots());
    }
  }
}

TEST_CASE("asymptotic values on A2") {
  const RootSystem rs = RootSystem::parse("A2");
  CHECK(flag_asym_h(rs, weight({1, 1})) == CohomologyVector{{6, 0, 0, 0}});
  CHECK(flag_asym_h(rs, weight({2, -1})) == CohomologyVector{{0, 6, 0, 0}});
  CHECK(flag_asym_h(rs, weight({-1, -1})) == CohomologyVector{{0, 0, 0, 6}});
  CHECK(flag_asym_h(rs, weight({1, -1})) == CohomologyVector::zeros(3));
  CHECK(top_self_intersection(rs, weight({2, -1})) == -6);
  CHECK(asymptotic_index(rs, weight({-4, 1})) == 2u);
  CHECK(asymptotic_index(rs, weight({Rational(1, 2), Rational(1, 3)})) == 0u);
  CHECK_FALSE(asymptotic_index(rs, weight({1, -1})).has_value());
  CHECK_THROWS_AS(flag_asym_h(rs, weight({1, 1, 1})), DimensionMismatch);
  // Degree-3 homogeneity on a non-integral class.
  const Weight xi = weight({Rational(3, 2), Rational(-1, 3)});
  CHECK(flag_asym_h(rs, Rational(5) * xi) == flag_asym_h(rs, xi).scaled(125));
}

TEST_CASE("chamber counts equal the Weyl group order") {
  const std::vector<std::pair<std::string, std::size_t>> expected{
      {"A1", 2}, {"A2", 6}, {"B2", 8}, {"G2", 12}, {"A3", 24}, {"B3", 48}, {"C3", 48}};
  for (const auto& [token, order] : expected) {
    const RootSystem rs = RootSystem::parse(token);
    const auto chambers = enumerate_chambers(rs);
    CHECK_MESSAGE(chambers.size() == order, token);
    std::vector<std::size_t> by_index(rs.num_positive_roots() + 1, 0);
    for (const auto& c : chambers) {
      CHECK(c.nonempty);
      ++by_index[c.index];
      // The witness lies in the open chamber.
      for (std::size_t v = 0; v < rs.num_positive_roots(); ++v) {
        const int s = sign(rs.coroot_pairing(c.witness, v));
        CHECK(s == (c.signs[v] == Sign::Positive ? 1 : -1));
      }
    }
    // Exactly one chamber of index 0 and one of full index.
    CHECK(by_index.front() == 1);
    CHECK(by_index.back() == 1);
  }
  CHECK_THROWS_AS(enumerate_chambers(RootSystem::parse("E6")), UnsupportedType);
}

TEST_CASE("A2 chambers in lexicographic order") {
  const auto chambers = enumerate_chambers(RootSystem::parse("A2"));
  std::vector<std::string> signs;
  for (const auto& c : chambers) signs.push_back(sign_string(c.signs));
  CHECK(signs == std::vector<std::string>{"+++", "+-+", "+--", "-++", "-+-", "---"});
}

TEST_CASE("flag variety model") {
  const FlagVariety a2(RootSystem::parse("A2"));
  CHECK(a2.dimension() == 3);
  CHECK(a2.rank() == 2);
  CHECK(a2.basis().labels() == std::vector<std::string>{"omega1", "omega2"});
  CHECK(a2.chamber_id(weight({1, 1})) == ChamberLabel("+++"));
  CHECK_FALSE(a2.chamber_id(weight({1, -1})).has_value());
  CHECK(a2.chamber_polynomial("+-+", weight({2, -1})) == Vector{0, 6, 0, 0});
  CHECK_THROWS_AS(a2.chamber_polynomial("++", weight({1, 1})), InvalidArgument);
  for (const auto& w : a2.wall_points(1, 3)) CHECK_FALSE(a2.chamber_id(w.point).has_value());
  CHECK(a2.wall_points(1, 3).size() == 9);

  const auto sample = sample_classes(2, 200, 0);
  CHECK(norm_growth_ratio(a2, sample) <= a2.norm_bound_constant());
  const SuiteOptions opt{0, 100};
  for (Suite s : all_suites()) {
    const auto outcome = run_suite(a2, s, opt);
    CHECK_MESSAGE(outcome.passed, outcome.suite << ": " << outcome.witness.value_or(""));
  }
}

TEST_CASE("suites on B2 and G2") {
  for (const char* token : {"B2", "G2"}) {
    const FlagVariety model(RootSystem::parse(token));
    const SuiteOptions opt{1, 60};
    for (Suite s : {Suite::Homogeneity, Suite::Walls, Suite::Euler, Suite::NormGrowth}) {
      const auto outcome = run_suite(model, s, opt);
      CHECK_MESSAGE(outcome.passed, token << " " << outcome.suite << ": " << outcome.witness.value_or(""));
    }
  }
}
