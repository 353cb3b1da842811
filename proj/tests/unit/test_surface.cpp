#include <asymcoh/core/harness.hpp>
#include <asymcoh/core/sampling.hpp>
#include <asymcoh/core/suites.hpp>
#include <asymcoh/error.hpp>
#include <asymcoh/surface/surface_variety.hpp>
#include <asymcoh/surface/zariski.hpp>

#include <doctest.h>

#include <algorithm>

using namespace asymcoh;
using namespace asymcoh::surface;

namespace {

struct OracleSolution {
  std::vector<std::size_t> support;
  DivisorClass positive;
};

// Every negative definite support S, with P = D - sum a_i C_i, P.C_i = 0 on S,
// a_i > 0 and P nef. Exactly one S qualifies for a pseudo-effective D.
std::vector<OracleSolution> subset_oracle(const SurfaceModel& model, const DivisorClass& d) {
  std::vector<OracleSolution> out;
  const std::size_t k = model.curves().size();
  for (std::uint32_t mask = 0; mask < (1u << k); ++mask) {
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < k; ++i)
      if (mask & (1u << i)) s.push_back(i);
    const SymMatrix g = model.curve_gram(s);
    if (!s.empty() && !is_negative_definite(g)) continue;
    Vector rhs;
    for (auto i : s) rhs.push_back(model.intersect(d, model.curves()[i].cls));
    const Vector a = s.empty() ? Vector{} : solve_symmetric(g, rhs);
    if (std::any_of(a.begin(), a.end(), [](const Rational& x) { return x <= 0; })) continue;
    DivisorClass p = d;
    for (std::size_t t = 0; t < s.size(); ++t) p -= a[t] * model.curves()[s[t]].cls;
    if (!is_nef(model, p)) continue;
    out.push_back({s, p});
  }
  return out;
}

std::vector<std::string> support_names(const std::vector<ZariskiChamber>& chambers, const SurfaceModel& m) {
  std::vector<std::string> out;
  for (const auto& c : chambers) {
    if (!c.witness) continue;
    std::string s = "{";
    for (std::size_t t = 0; t < c.support.size(); ++t) s += (t ? "," : "") + m.curves()[c.support[t]].name;
    out.push_back(s + "}");
  }
  return out;
}

}  // namespace

TEST_CASE("model validation") {
  const SymMatrix hodge{{1, 0}, {0, -1}};
  const DivisorClass ample{2, -1};
  CHECK_NOTHROW(SurfaceModel::create({"H", "E"}, hodge, {{"E", {0, 1}}}, ConeMode::Polyhedral,
                                     {{0, 1}, {1, -1}}, ample));
  CHECK_THROWS_AS(SurfaceModel::create({"H", "E"}, SymMatrix{{1, 0}, {0, 1}}, {{"E", {0, 1}}},
                                       ConeMode::Polyhedral, {{0, 1}}, ample),
                  ModelValidationError);
  CHECK_THROWS_AS(SurfaceModel::create({"H", "E"}, hodge, {{"E", {0, 1}}}, ConeMode::Polyhedral,
                                       {{0, 1}}, DivisorClass{1, 1}),
                  ModelValidationError);
  CHECK_THROWS_AS(SurfaceModel::create({"H", "E"}, hodge, {{"F", {1, 0}}}, ConeMode::Polyhedral,
                                       {{0, 1}}, ample),
                  ModelValidationError);
  CHECK_THROWS_AS(SurfaceModel::create({"H", "E"}, hodge, {{"E", {0, 1}}}, ConeMode::Quadric, {}, ample),
                  ModelValidationError);
  CHECK_THROWS_AS(SurfaceModel::create({"H", "E"}, hodge, {}, ConeMode::Polyhedral, {}, ample),
                  ModelValidationError);
  CHECK_THROWS_AS(SurfaceModel::create({"H"}, hodge, {}, ConeMode::Polyhedral, {{1, 0}}, ample),
                  ModelValidationError);
  CHECK_THROWS_AS(blowup_plane(3), InvalidArgument);
}

TEST_CASE("nef and pseudo-effective cones") {
  const SurfaceModel bl1 = blowup_plane(1);
  CHECK(is_nef(bl1, {1, -1}));
  CHECK(is_nef(bl1, {1, 0}));
  CHECK_FALSE(is_nef(bl1, {0, 1}));
  CHECK(is_pseff(bl1, {0, 1}));
  CHECK(is_pseff(bl1, {3, 1}));
  CHECK_FALSE(is_pseff(bl1, {0, -1}));
  CHECK_FALSE(is_pseff(bl1, {1, -3}));
  CHECK(is_pseff(bl1, {0, 0}));
  const SurfaceModel exe = elliptic_square();
  CHECK(is_nef(exe, {1, 1, 1}));
  CHECK(is_nef(exe, {1, 0, 0}));
  CHECK(is_pseff(exe, {1, 0, 0}));
  CHECK_FALSE(is_pseff(exe, {1, 1, -1}));
  CHECK_FALSE(is_pseff(exe, {-1, 0, 0}));
}

TEST_CASE("worked values on the blow-up of the plane in a point") {
  const SurfaceModel bl1 = blowup_plane(1);
  const auto z = zariski_decompose(bl1, {3, 1});
  CHECK(z.positive == DivisorClass{3, 0});
  CHECK(z.negative == DivisorClass{0, 1});
  CHECK(z.support == std::vector<std::size_t>{0});
  CHECK(z.coefficients == std::vector<Rational>{1});
  CHECK(surface_asym_h(bl1, {3, 1}) == CohomologyVector{{9, 1, 0}});
  CHECK(surface_asym_h(bl1, {1, -3}) == CohomologyVector{{0, 8, 0}});
  CHECK(evaluate_surface(bl1, {1, -3}).kase == SurfaceCase::Neither);
  CHECK(surface_asym_h(bl1, {-3, -1}) == CohomologyVector{{0, 1, 9}});
  CHECK(evaluate_surface(bl1, {-3, -1}).kase == SurfaceCase::AntiPseudoEffective);
  CHECK(surface_asym_h(bl1, {0, 0}) == CohomologyVector::zeros(2));
  CHECK(volume(bl1, {3, 1}) == 9);
  CHECK(volume(bl1, {1, -3}) == 0);
  CHECK(is_big(bl1, {3, 1}));
  CHECK_FALSE(is_big(bl1, {1, -1}));
  CHECK(zariski_chamber(bl1, {3, 1}) == std::vector<std::string>{"E"});
  CHECK(zariski_chamber(bl1, {2, -1}).empty());
  CHECK_THROWS_AS(zariski_chamber(bl1, {1, -1}), NotBig);
  CHECK_THROWS_AS(zariski_decompose(bl1, {1, -3}), NotPseudoEffective);
  CHECK_THROWS_AS(zariski_decompose(bl1, {1, 0, 0}), DimensionMismatch);
  CHECK(to_string(SurfaceCase::AntiPseudoEffective) == "anti-pseff");
}

TEST_CASE("worked values on the blow-up of the plane in two points") {
  const SurfaceModel bl2 = blowup_plane(2);
  CHECK(surface_asym_h(bl2, {1, 0, 0}) == CohomologyVector{{1, 0, 0}});
  CHECK(surface_asym_h(bl2, {0, 1, 1}) == CohomologyVector{{0, 2, 0}});
  CHECK(surface_asym_h(bl2, {1, 1, 0}) == CohomologyVector{{1, 1, 0}});
  const auto z = zariski_decompose(bl2, {2, 1, 1});
  CHECK(z.support == std::vector<std::size_t>{0, 1});
  CHECK(z.positive == DivisorClass{2, 0, 0});
  // 3H - 2E1 - 2E2 meets L negatively; (D - aL).L = 0 gives a = 1.
  const auto zl = zariski_decompose(bl2, {3, -2, -2});
  CHECK(zl.support == std::vector<std::size_t>{2});
  CHECK(zl.coefficients == std::vector<Rational>{1});
  CHECK(zl.positive == DivisorClass{2, -1, -1});
}

TEST_CASE("decompositions match the unique subset-oracle solution") {
  for (unsigned k : {1u, 2u}) {
    const SurfaceModel model = blowup_plane(k);
    const auto sample = sample_classes(model.rank(), 300, 5 + k);
    std::size_t tested = 0;
    for (const auto& d : sample) {
      if (!is_pseff(model, d)) continue;
      ++tested;
      const auto z = zariski_decompose(model, d);
      const auto oracle = subset_oracle(model, d);
      REQUIRE_MESSAGE(oracle.size() == 1, d.to_string());
      CHECK(oracle[0].support == z.support);
      CHECK(oracle[0].positive == z.positive);
      CHECK_NOTHROW(certify_decomposition(model, d, z));
      for (std::size_t i = 1; i < z.support_history.size(); ++i) {
        const auto& prev = z.support_history[i - 1];
        const auto& next = z.support_history[i];
        CHECK(std::includes(next.begin(), next.end(), prev.begin(), prev.end()));
      }
    }
    CHECK(tested > 50);
  }
}

TEST_CASE("certificate rejects a wrong decomposition") {
  const SurfaceModel bl1 = blowup_plane(1);
  auto z = zariski_decompose(bl1, {3, 1});
  z.positive = DivisorClass{3, 1};
  z.negative = DivisorClass{0, 0};
  CHECK_THROWS_AS(certify_decomposition(bl1, {3, 1}, z), IllConditionedModel);
}

TEST_CASE("Serre symmetry and the Euler identity") {
  for (unsigned k : {0u, 1u, 2u}) {
    const SurfaceModel model = blowup_plane(k);
    for (const auto& d : sample_classes(model.rank(), 150, 11)) {
      const auto h = surface_asym_h(model, d);
      const auto hn = surface_asym_h(model, -d);
      CHECK(h[0] == hn[2]);
      CHECK(h[1] == hn[1]);
      CHECK(h.alternating_sum() == model.intersect(d, d));
      CHECK(h.all_nonnegative());
    }
  }
}

TEST_CASE("Zariski chamber enumeration") {
  const SurfaceModel bl1 = blowup_plane(1);
  CHECK(support_names(enumerate_zariski_chambers(bl1), bl1) == std::vector<std::string>{"{}", "{E}"});
  const SurfaceModel bl2 = blowup_plane(2);
  const auto chambers = enumerate_zariski_chambers(bl2);
  CHECK(support_names(chambers, bl2) ==
        std::vector<std::string>{"{}", "{E1}", "{E2}", "{E1,E2}", "{L}"});
  for (const auto& c : chambers) {
    REQUIRE(c.witness.has_value());
    CHECK(zariski_decompose(bl2, *c.witness).support == c.support);
    CHECK(is_big(bl2, *c.witness));
  }
  CHECK(support_names(enumerate_zariski_chambers(blowup_plane(0)), blowup_plane(0)) ==
        std::vector<std::string>{"{}"});
  CHECK_THROWS_AS(enumerate_zariski_chambers(elliptic_square()), UnsupportedConeMode);
}

TEST_CASE("E x E as a quadric-mode surface") {
  const SurfaceModel exe = elliptic_square();
  CHECK(surface_asym_h(exe, {1, 1, 1}) == CohomologyVector{{6, 0, 0}});
  CHECK(surface_asym_h(exe, {1, 1, -1}) == CohomologyVector{{0, 2, 0}});
  CHECK(surface_asym_h(exe, {-1, -1, -1}) == CohomologyVector{{0, 0, 6}});
  CHECK(surface_asym_h(exe, {1, 0, 0}) == CohomologyVector::zeros(2));
}

TEST_CASE("surface variety models pass the property suites") {
  const std::vector<std::pair<std::string, SurfaceModel>> models{
      {"Bl0", blowup_plane(0)}, {"Bl1", blowup_plane(1)}, {"Bl2", blowup_plane(2)}, {"ExE", elliptic_square()}};
  for (const auto& [name, m] : models) {
    const SurfaceVariety v(name, m);
    const SuiteOptions opt{2, 80};
    for (Suite s : all_suites()) {
      const auto outcome = run_suite(v, s, opt);
      CHECK_MESSAGE(outcome.passed, name << " " << outcome.suite << ": " << outcome.witness.value_or(""));
    }
    for (const auto& w : v.wall_points(3, m.rank() + 1)) CHECK_FALSE(v.chamber_id(w.point).has_value());
  }
}

TEST_CASE("surface chamber labels") {
  const SurfaceVariety bl1("Bl1", blowup_plane(1));
  CHECK(bl1.chamber_id({3, 1}) == ChamberLabel("P{E}"));
  CHECK(bl1.chamber_id({2, -1}) == ChamberLabel("P{}"));
  CHECK(bl1.chamber_id({-3, -1}) == ChamberLabel("A{E}"));
  CHECK(bl1.chamber_id({1, -3}) == ChamberLabel("X"));
  CHECK_FALSE(bl1.chamber_id({1, -1}).has_value());
  CHECK_FALSE(bl1.chamber_id({1, 0}).has_value());
  CHECK(bl1.chamber_polynomial("P{E}", {3, 1}) == Vector{9, 1, 0});
  CHECK(bl1.chamber_polynomial("X", {1, -3}) == Vector{0, 8, 0});
}
