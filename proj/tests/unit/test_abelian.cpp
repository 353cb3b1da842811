#include <asymcoh/abelian/abelian.hpp>
#include <asymcoh/abelian/abelian_variety.hpp>
#include <asymcoh/core/sampling.hpp>
#include <asymcoh/core/suites.hpp>
#include <asymcoh/error.hpp>
#include <asymcoh/surface/zariski.hpp>

#include <doctest.h>

using namespace asymcoh;
using namespace asymcoh::abelian;

namespace {

std::vector<Vector> standard_lattice(unsigned g) {
  std::vector<Vector> out;
  for (unsigned i = 0; i < 2 * g; ++i) {
    Vector v(2 * g, Rational(0));
    v[i] = 1;
    out.push_back(std::move(v));
  }
  return out;
}

ComplexMatrix real_diag(std::initializer_list<Rational> d) {
  const std::size_t g = d.size();
  Matrix re(g, g);
  std::size_t i = 0;
  for (const auto& x : d) {
    re(i, i) = x;
    ++i;
  }
  return {re, Matrix(g, g)};
}

}  // namespace

TEST_CASE("g = 1 worked values") {
  const AbelianModel two = elliptic_curve(2);
  CHECK(two.lattice_form(DivisorClass{1}).matrix() == Matrix{{0, 2}, {-2, 0}});
  CHECK(hermitian_index(two, DivisorClass{1}) == 0u);
  CHECK(abelian_asym_h(two, DivisorClass{1}) == CohomologyVector{{2, 0}});
  CHECK(abelian_asym_h(two, DivisorClass{-1}) == CohomologyVector{{0, 2}});
  CHECK(abelian_asym_h(two, DivisorClass{0}) == CohomologyVector::zeros(1));
  CHECK_FALSE(hermitian_index(two, DivisorClass{0}).has_value());
  CHECK(hermitian_index(elliptic_curve(-3), DivisorClass{1}) == 1u);
  // h^0(mL) = 2m on an elliptic curve for a degree-2 bundle: normalised by m / 1!.
  for (unsigned m = 1; m <= 10; ++m) {
    const Rational hm = 2 * m;
    CHECK(hm / m == abelian_asym_h(two, DivisorClass{1})[0]);
  }
  CHECK_THROWS_AS(abelian_asym_h(two, DivisorClass{1, 1}), DimensionMismatch);
}

TEST_CASE("model validation") {
  CHECK_THROWS_AS(AbelianModel::create(0, {}, {}), ModelValidationError);
  CHECK_THROWS_AS(AbelianModel::create(1, {}, standard_lattice(1)), ModelValidationError);
  // Not Hermitian.
  CHECK_THROWS_AS(AbelianModel::create(2, {{Matrix{{1, 1}, {0, 1}}, Matrix(2, 2)}}, standard_lattice(2)),
                  ModelValidationError);
  CHECK_THROWS_AS(AbelianModel::create(2, {{Matrix(2, 2), Matrix{{1, 0}, {0, 0}}}}, standard_lattice(2)),
                  ModelValidationError);
  // Dependent lattice.
  CHECK_THROWS_AS(AbelianModel::create(1, {real_diag({2})}, {{1, 0}, {2, 0}}), ModelValidationError);
  // Wrong generator count or length.
  CHECK_THROWS_AS(AbelianModel::create(1, {real_diag({2})}, {{1, 0}}), ModelValidationError);
  CHECK_THROWS_AS(AbelianModel::create(1, {real_diag({2})}, {{1, 0, 0}, {0, 1, 0}}), ModelValidationError);
  // E not integral on the lattice.
  CHECK_THROWS_AS(AbelianModel::create(1, {real_diag({Rational(1, 2)})}, standard_lattice(1)),
                  ModelValidationError);
  CHECK_NOTHROW(AbelianModel::create(1, {real_diag({Rational(1, 2)})}, {{1, 0}, {0, 2}}));
  // Wrong matrix size.
  CHECK_THROWS_AS(AbelianModel::create(2, {real_diag({1})}, standard_lattice(2)), ModelValidationError);
}

TEST_CASE("index from the Hermitian signature") {
  const AbelianModel m = AbelianModel::create(2, {real_diag({1, 0}), real_diag({0, 1})}, standard_lattice(2));
  CHECK(hermitian_index(m, DivisorClass{1, 1}) == 0u);
  CHECK(hermitian_index(m, DivisorClass{1, -1}) == 1u);
  CHECK(hermitian_index(m, DivisorClass{-1, -1}) == 2u);
  CHECK_FALSE(hermitian_index(m, DivisorClass{1, 0}).has_value());
  // Off-diagonal complex entries: H = [[1, i], [-i, 1]] is degenerate, [[2, i], [-i, 1]] is definite.
  const ComplexMatrix h{Matrix{{1, 0}, {0, 1}}, Matrix{{0, 1}, {-1, 0}}};
  const ComplexMatrix d{Matrix{{1, 0}, {0, 0}}, Matrix(2, 2)};
  const AbelianModel c = AbelianModel::create(2, {h, d}, standard_lattice(2));
  CHECK_FALSE(hermitian_index(c, DivisorClass{1, 0}).has_value());
  CHECK(hermitian_index(c, DivisorClass{1, 1}) == 0u);
  CHECK(hermitian_index(c, DivisorClass{-1, -1}) == 2u);
  CHECK(abelian_asym_h(c, DivisorClass{1, 1}) == CohomologyVector{{2, 0, 0}});
}

TEST_CASE("direct sums of g = 1 forms") {
  for (int a : {-3, -1, 2, 5}) {
    for (int b : {-2, 1, 4}) {
      const AbelianModel m = AbelianModel::create(2, {real_diag({a, b})}, standard_lattice(2));
      const DivisorClass xi{1};
      const unsigned negatives = (a < 0) + (b < 0);
      CHECK(hermitian_index(m, xi) == negatives);
      CHECK(pfaffian(m.lattice_form(xi)) == a * b);
      CHECK(abelian_asym_h(m, xi)[negatives] == 2 * std::abs(a * b));
    }
  }
}

TEST_CASE("Pfaffian sign follows the index and the lattice orientation") {
  const std::vector<Vector> flipped{{0, 1, 0, 0}, {1, 0, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}};
  const AbelianModel e = elliptic_square_model();
  const AbelianModel f = AbelianModel::create(2, e.basis_forms(), flipped);
  CHECK(e.orientation() == 1);
  CHECK(f.orientation() == -1);
  for (const auto& xi : sample_classes(3, 200, 4)) {
    const auto index = hermitian_index(e, xi);
    if (!index) continue;
    for (const AbelianModel* m : {&e, &f}) {
      const int expected = m->orientation() * (*index % 2 == 0 ? 1 : -1);
      CHECK(sign(pfaffian(m->lattice_form(xi))) == expected);
    }
    CHECK(abelian_asym_h(e, xi) == abelian_asym_h(f, xi));
  }
}

TEST_CASE("E x E preset worked values") {
  CHECK(exe_asym_h(1, 1, 1) == CohomologyVector{{6, 0, 0}});
  CHECK(exe_asym_h(1, 1, -1) == CohomologyVector{{0, 2, 0}});
  CHECK(exe_asym_h(-1, -1, -1) == CohomologyVector{{0, 0, 6}});
  CHECK(exe_asym_h(1, 0, 0) == CohomologyVector::zeros(2));
  CHECK(exe_asym_h(0, 0, 0) == CohomologyVector::zeros(2));
  CHECK(exe_index(1, 1, Rational(-1, 2)) == std::nullopt);
}

TEST_CASE("E x E preset agrees with the full model and the quadric surface") {
  const AbelianModel full = elliptic_square_model();
  const surface::SurfaceModel quadric = surface::elliptic_square();
  for (const auto& xi : sample_classes(3, 400, 8)) {
    const auto preset = exe_asym_h(xi[0], xi[1], xi[2]);
    CHECK(abelian_asym_h(full, xi) == preset);
    CHECK(hermitian_index(full, xi) == exe_index(xi[0], xi[1], xi[2]));
    CHECK(surface::surface_asym_h(quadric, xi) == preset);
  }
  for (const auto& xi : sample_classes(2, 100, 9)) {
    const DivisorClass lifted{xi[0], xi[1], 0};
    CHECK(abelian_asym_h(full, lifted) == exe_asym_h(xi[0], xi[1], 0));
  }
}

TEST_CASE("duality") {
  const AbelianModel full = elliptic_square_model();
  for (const auto& xi : sample_classes(3, 100, 10)) {
    const auto h = abelian_asym_h(full, xi);
    const auto hn = abelian_asym_h(full, -xi);
    for (unsigned i = 0; i <= 2; ++i) CHECK(hn[2 - i] == h[i]);
    const auto index = hermitian_index(full, xi);
    CHECK(h.support_size() == (index ? 1u : 0u));
  }
}

TEST_CASE("g = 3 product model") {
  const AbelianModel m =
      AbelianModel::create(3, {real_diag({1, 0, 0}), real_diag({0, 1, 0}), real_diag({0, 0, 1})},
                           standard_lattice(3));
  CHECK(abelian_asym_h(m, DivisorClass{1, 2, 3}) == CohomologyVector{{36, 0, 0, 0}});
  CHECK(abelian_asym_h(m, DivisorClass{1, -2, 3}) == CohomologyVector{{0, 36, 0, 0}});
  CHECK(abelian_top_intersection(m, DivisorClass{1, -2, 3}) == -36);
  const AbelianVariety v("g3", m);
  const SuiteOptions opt{0, 60};
  for (Suite s : {Suite::Homogeneity, Suite::Euler, Suite::NormGrowth, Suite::Walls}) {
    const auto outcome = run_suite(v, s, opt);
    CHECK_MESSAGE(outcome.passed, outcome.suite << ": " << outcome.witness.value_or(""));
  }
}

TEST_CASE("abelian variety models pass the property suites") {
  const AbelianVariety e1("elliptic", elliptic_curve(2));
  const AbelianVariety full("ExE full", elliptic_square_model());
  const ExEPreset preset;
  const std::vector<const VarietyModel*> models{&e1, &full, &preset};
  for (const VarietyModel* m : models) {
    const SuiteOptions opt{5, 80};
    for (Suite s : all_suites()) {
      const auto outcome = run_suite(*m, s, opt);
      CHECK_MESSAGE(outcome.passed, m->name() << " " << outcome.suite << ": " << outcome.witness.value_or(""));
    }
    const auto walls = m->wall_points(1, m->rank() + 1);
    CHECK(walls.size() >= 1);
    for (const auto& w : walls) CHECK_FALSE(m->chamber_id(w.point).has_value());
  }
  CHECK(preset.chamber_polynomial("1", DivisorClass{1, 1, -1}) == Vector{0, 2, 0});
  CHECK_THROWS_AS(preset.chamber_polynomial("3", DivisorClass{1, 1, 1}), InvalidArgument);
  CHECK(full.norm_bound_constant() >= preset.norm_bound_constant());
}
