#include <asymcoh/abelian/abelian_variety.hpp>
#include <asymcoh/core/sampling.hpp>
#include <asymcoh/error.hpp>

#include <boost/multiprecision/integer.hpp>

#include <algorithm>

namespace asymcoh::abelian {

namespace {

unsigned parse_index_label(const ChamberLabel& label, unsigned g) {
  if (label.size() != 1 || label[0] < '0' || static_cast<unsigned>(label[0] - '0') > g) {
    throw InvalidArgument("bad chamber label '" + label + "'");
  }
  return static_cast<unsigned>(label[0] - '0');
}

Integer ceil_sqrt(const Integer& n) {
  Integer s = boost::multiprecision::sqrt(n);
  if (s * s < n) ++s;
  return s;
}

Integer ceil_rational(const Rational& q) {
  Integer num = numerator(q);
  Integer den = denominator(q);
  Integer c = num / den;
  if (c * den < num) ++c;
  return c;
}

DivisorClass random_direction(RationalSampler& sampler, std::size_t r) {
  DivisorClass d = DivisorClass::zero(r);
  while (d.is_zero()) {
    for (std::size_t i = 0; i < r; ++i) d[i] = sampler.next_int(-3, 3);
  }
  return d;
}

// A direction d with point +- d/k nondegenerate for the probe denominators used by the walls suite.
DivisorClass crossing_direction(const AbelianModel& model, RationalSampler& sampler, const DivisorClass& point) {
  const std::size_t r = model.rank();
  DivisorClass d = random_direction(sampler, r);
  for (int attempt = 0; attempt < 200; ++attempt) {
    bool crosses = true;
    for (unsigned k : {7u, 100u, 1000u}) {
      const DivisorClass step = Rational(1, k) * d;
      crosses = crosses && hermitian_index(model, point + step) && hermitian_index(model, point - step);
    }
    if (crosses) return d;
    d = random_direction(sampler, r);
  }
  return d;
}

bool has_point(const std::vector<WallPoint>& points, const DivisorClass& x) {
  return std::any_of(points.begin(), points.end(), [&](const WallPoint& w) { return w.point == x; });
}

}  // namespace

AbelianVariety::AbelianVariety(std::string name, AbelianModel model)
    : name_(std::move(name)), model_(std::move(model)) {}

NormedBasis AbelianVariety::basis() const {
  std::vector<std::string> labels;
  for (std::size_t k = 1; k <= model_.rank(); ++k) labels.push_back("H" + std::to_string(k));
  return NormedBasis(std::move(labels));
}

CohomologyVector AbelianVariety::evaluate(const DivisorClass& xi) const { return abelian_asym_h(model_, xi); }

std::optional<ChamberLabel> AbelianVariety::chamber_id(const DivisorClass& xi) const {
  const auto index = hermitian_index(model_, xi);
  if (!index) return std::nullopt;
  return std::to_string(*index);
}

Vector AbelianVariety::chamber_polynomial(const ChamberLabel& label, const DivisorClass& xi) const {
  const unsigned index = parse_index_label(label, model_.g());
  Vector values(model_.g() + 1, Rational(0));
  const Rational top = abelian_top_intersection(model_, xi);
  values[index] = index % 2 == 0 ? top : Rational(-top);
  return values;
}

Rational AbelianVariety::top_intersection(const DivisorClass& xi) const {
  return abelian_top_intersection(model_, xi);
}

Rational AbelianVariety::norm_bound_constant() const {
  // |Pf(E)|^2 = |det E| <= prod_i |row_i(E)|_1 and |row_i(E_xi)|_1 <= |xi|_max * R_i.
  const std::size_t n = 2 * model_.g();
  Rational product = 1;
  for (std::size_t i = 0; i < n; ++i) {
    Rational row = 0;
    for (std::size_t k = 0; k < model_.rank(); ++k) {
      for (std::size_t j = 0; j < n; ++j) row += abs(model_.basis_lattice_form(k)(i, j));
    }
    product *= row;
  }
  return Rational(factorial(model_.g())) * Rational(ceil_sqrt(ceil_rational(product)));
}

std::vector<WallPoint> AbelianVariety::wall_points(std::uint64_t seed, std::size_t per_wall) const {
  const std::string wall = "degenerate";
  const std::size_t r = model_.rank();
  RationalSampler sampler(seed);
  std::vector<WallPoint> out;

  if (model_.g() == 1) {
    Vector normal(r);
    for (std::size_t k = 0; k < r; ++k) normal[k] = pfaffian(model_.basis_lattice_form(k));
    const auto kernel = nullspace(Matrix::from_rows({normal}));
    if (kernel.empty()) {
      out.push_back({wall, DivisorClass::zero(r), DivisorClass(normal)});
      return out;
    }
    for (std::size_t attempt = 0; out.size() < per_wall && attempt < 1000 * per_wall; ++attempt) {
      Vector p(r, Rational(0));
      for (const auto& k : kernel) {
        const Rational c = sampler.next_int(-6, 6);
        for (std::size_t j = 0; j < r; ++j) p[j] += c * k[j];
      }
      DivisorClass point(std::move(p));
      if (point.is_zero() || has_point(out, point)) continue;
      out.push_back({wall, std::move(point), DivisorClass(normal)});
    }
    return out;
  }

  std::vector<DivisorClass> seeds;
  std::vector<std::int64_t> digits(r, -2);
  for (;;) {
    DivisorClass c = DivisorClass::zero(r);
    for (std::size_t i = 0; i < r; ++i) c[i] = digits[i];
    if (!c.is_zero() && !hermitian_index(model_, c)) seeds.push_back(std::move(c));
    std::size_t i = 0;
    while (i < r && digits[i] == 2) digits[i++] = -2;
    if (i == r) break;
    ++digits[i];
  }
  if (seeds.empty()) return out;

  const std::size_t seed_quota = model_.g() == 2 ? (per_wall + 1) / 2 : per_wall;
  for (const auto& a : seeds) {
    if (out.size() >= seed_quota) break;
    out.push_back({wall, a, crossing_direction(model_, sampler, a)});
  }
  if (model_.g() != 2) return out;
  for (std::size_t attempt = 0; out.size() < per_wall && attempt < 100 * per_wall; ++attempt) {
    // Pf(E_{a + t b}) = t (c1 + c2 t) when Pf(E_a) = 0; the second root is -c1 / c2.
    const DivisorClass& a = seeds[attempt % seeds.size()];
    const DivisorClass b = random_direction(sampler, r);
    const Rational p_plus = pfaffian(model_.lattice_form(a + b));
    const Rational p_minus = pfaffian(model_.lattice_form(a - b));
    const Rational c2 = (p_plus + p_minus) / 2;
    const Rational c1 = (p_plus - p_minus) / 2;
    if (c2.is_zero()) continue;
    DivisorClass point = a + Rational(-c1 / c2) * b;
    if (point.is_zero() || has_point(out, point)) continue;
    DivisorClass direction = crossing_direction(model_, sampler, point);
    out.push_back({wall, std::move(point), std::move(direction)});
  }
  return out;
}

CohomologyVector ExEPreset::evaluate(const DivisorClass& xi) const {
  if (xi.rank() != 3) throw DimensionMismatch("E x E classes have 3 coordinates");
  return exe_asym_h(xi[0], xi[1], xi[2]);
}

std::optional<ChamberLabel> ExEPreset::chamber_id(const DivisorClass& xi) const {
  if (xi.rank() != 3) throw DimensionMismatch("E x E classes have 3 coordinates");
  const auto index = exe_index(xi[0], xi[1], xi[2]);
  if (!index) return std::nullopt;
  return std::to_string(*index);
}

Vector ExEPreset::chamber_polynomial(const ChamberLabel& label, const DivisorClass& xi) const {
  const unsigned index = parse_index_label(label, 2);
  Vector values(3, Rational(0));
  const Rational q = top_intersection(xi);
  values[index] = index % 2 == 0 ? q : Rational(-q);
  return values;
}

Rational ExEPreset::top_intersection(const DivisorClass& xi) const {
  if (xi.rank() != 3) throw DimensionMismatch("E x E classes have 3 coordinates");
  return 2 * (xi[0] * xi[1] + xi[0] * xi[2] + xi[1] * xi[2]);
}

std::vector<WallPoint> ExEPreset::wall_points(std::uint64_t seed, std::size_t per_wall) const {
  RationalSampler sampler(seed);
  std::vector<WallPoint> out;
  const DivisorClass ample{1, 1, 1};
  for (std::size_t attempt = 0; out.size() < per_wall && attempt < 1000 * per_wall; ++attempt) {
    const Rational x = sampler.next_rational(6, 4);
    const Rational y = sampler.next_rational(6, 4);
    if ((x + y).is_zero()) continue;
    DivisorClass point{x, y, Rational(-x * y / (x + y))};
    if (point.is_zero() || has_point(out, point)) continue;
    out.push_back({"xy+xz+yz=0", std::move(point), ample});
  }
  return out;
}

}  // namespace asymcoh::abelian
