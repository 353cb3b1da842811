#include <asymcoh/core/sampling.hpp>
#include <asymcoh/error.hpp>
#include <asymcoh/exactlin/lp.hpp>
#include <asymcoh/surface/surface_variety.hpp>

#include <algorithm>

namespace asymcoh::surface {
namespace {

Vector pairing_functional(const SurfaceModel& model, const Vector& c) { return model.gram().matrix() * c; }

bool contains(const std::vector<std::size_t>& v, std::size_t x) {
  return std::find(v.begin(), v.end(), x) != v.end();
}

// Big and off every Zariski wall: P^2 > 0 and P . C != 0 for curves outside the support.
bool interior_decomposition(const SurfaceModel& model, const ZariskiDecomposition& z) {
  if (model.intersect(z.positive, z.positive).sign() <= 0) return false;
  for (std::size_t i = 0; i < model.curves().size(); ++i) {
    if (contains(z.support, i)) continue;
    if (model.intersect(z.positive, model.curves()[i].cls).is_zero()) return false;
  }
  return true;
}

bool insert_new(std::vector<DivisorClass>& seen, const DivisorClass& x) {
  if (std::find(seen.begin(), seen.end(), x) != seen.end()) return false;
  seen.push_back(x);
  return true;
}

}  // namespace

SurfaceVariety::SurfaceVariety(std::string name, SurfaceModel model)
    : name_(std::move(name)), model_(std::move(model)) {}

CohomologyVector SurfaceVariety::evaluate(const DivisorClass& xi) const { return surface_asym_h(model_, xi); }

std::string SurfaceVariety::support_label(const std::vector<std::size_t>& support) const {
  std::string s = "{";
  for (std::size_t k = 0; k < support.size(); ++k) {
    if (k) s += ",";
    s += model_.curves()[support[k]].name;
  }
  return s + "}";
}

std::vector<std::size_t> SurfaceVariety::parse_support(std::string_view names) const {
  if (names.size() < 2 || names.front() != '{' || names.back() != '}') {
    throw InvalidArgument("bad support label '" + std::string(names) + "'");
  }
  names = names.substr(1, names.size() - 2);
  std::vector<std::size_t> support;
  while (!names.empty()) {
    const auto comma = names.find(',');
    const auto token = names.substr(0, comma);
    bool found = false;
    for (std::size_t i = 0; i < model_.curves().size() && !found; ++i) {
      if (model_.curves()[i].name == token) {
        support.push_back(i);
        found = true;
      }
    }
    if (!found) throw InvalidArgument("unknown curve '" + std::string(token) + "' in chamber label");
    if (comma == std::string_view::npos) break;
    names.remove_prefix(comma + 1);
  }
  std::sort(support.begin(), support.end());
  return support;
}

std::optional<ChamberLabel> SurfaceVariety::chamber_id(const DivisorClass& xi) const {
  const SurfaceEvaluation e = evaluate_surface(model_, xi);
  switch (e.kase) {
    case SurfaceCase::Neither:
      return ChamberLabel("X");
    case SurfaceCase::PseudoEffective:
      if (!interior_decomposition(model_, *e.decomposition)) return std::nullopt;
      return "P" + support_label(e.decomposition->support);
    case SurfaceCase::AntiPseudoEffective:
      if (!interior_decomposition(model_, *e.decomposition)) return std::nullopt;
      return "A" + support_label(e.decomposition->support);
  }
  return std::nullopt;
}

Vector SurfaceVariety::chamber_polynomial(const ChamberLabel& label, const DivisorClass& xi) const {
  Vector h(3, Rational(0));
  if (label == "X") {
    h[1] = -model_.intersect(xi, xi);
    return h;
  }
  if (label.empty() || (label.front() != 'P' && label.front() != 'A')) {
    throw InvalidArgument("bad chamber label '" + label + "'");
  }
  const bool anti = label.front() == 'A';
  const auto support = parse_support(std::string_view(label).substr(1));
  const auto z = decomposition_on_support(model_, anti ? DivisorClass(-xi) : xi, support);
  h[anti ? 2 : 0] = model_.intersect(z.positive, z.positive);
  h[1] = -model_.intersect(z.negative, z.negative);
  return h;
}

Rational SurfaceVariety::top_intersection(const DivisorClass& xi) const { return model_.intersect(xi, xi); }

Rational SurfaceVariety::norm_bound_constant() const {
  // |D^2| <= sum |G_ij| |D|^2 and |N^2| = |b^T G_S^{-1} b| with |b_i| = |D . C_i| <= |D| w_i.
  Rational gram_sum = 0;
  const auto& g = model_.gram();
  for (std::size_t i = 0; i < g.dimension(); ++i)
    for (std::size_t j = 0; j < g.dimension(); ++j) gram_sum += abs(g(i, j));
  Rational worst = 0;
  const std::size_t k = model_.curves().size();
  std::vector<Rational> w(k, Rational(0));
  for (std::size_t i = 0; i < k; ++i)
    for (const auto& x : pairing_functional(model_, model_.curves()[i].cls.coords())) w[i] += abs(x);
  for (std::size_t mask = 1; mask < (std::size_t{1} << k); ++mask) {
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < k; ++i)
      if ((mask >> i) & 1u) s.push_back(i);
    const SymMatrix gs = model_.curve_gram(s);
    if (!is_negative_definite(gs)) continue;
    Rational bound = 0;
    for (std::size_t a = 0; a < s.size(); ++a) {
      Vector e(s.size(), Rational(0));
      e[a] = 1;
      const Vector col = solve_symmetric(gs, e);
      for (std::size_t b = 0; b < s.size(); ++b) bound += abs(col[b]) * w[s[a]] * w[s[b]];
    }
    worst = std::max(worst, bound);
  }
  return gram_sum + worst;
}

std::vector<WallPoint> SurfaceVariety::wall_points(std::uint64_t seed, std::size_t per_wall) const {
  return model_.cone_mode() == ConeMode::Quadric ? quadric_wall_points(seed, per_wall)
                                                 : polyhedral_wall_points(seed, per_wall);
}

std::vector<WallPoint> SurfaceVariety::polyhedral_wall_points(std::uint64_t seed, std::size_t per_wall) const {
  RationalSampler sampler(seed);
  std::vector<WallPoint> out;
  const std::size_t r = model_.rank();
  const auto gens = model_.effective_generators();
  const DivisorClass& ample = model_.ample();

  // Boundary of +-Eff: facets found among (r-1)-subsets of generators.
  if (r == 1) {
    out.push_back({"Eff boundary", DivisorClass::zero(1), ample});
  } else {
    std::vector<Vector> facet_normals;
    std::vector<std::size_t> pick(r - 1);
    for (std::size_t i = 0; i < pick.size(); ++i) pick[i] = i;
    while (pick.size() <= gens.size()) {
      std::vector<Vector> rows;
      for (auto i : pick) rows.push_back(gens[i]);
      const auto kernel = nullspace(Matrix::from_rows(rows));
      if (kernel.size() == 1) {
        Vector f = kernel.front();
        int side = 0;
        bool facet = true;
        for (const auto& g : gens) {
          const int s = sign(dot(f, g));
          if (s == 0) continue;
          if (side == 0) side = s;
          else if (s != side) facet = false;
        }
        if (facet && side != 0) {
          if (side < 0)
            for (auto& x : f) x = -x;
          // Leading nonzero coordinate scaled to 1.
          Rational lead = 0;
          for (const auto& x : f)
            if (!x.is_zero()) { lead = abs(x); break; }
          for (auto& x : f) x /= lead;
          if (std::find(facet_normals.begin(), facet_normals.end(), f) == facet_normals.end()) {
            facet_normals.push_back(f);
          }
        }
      }
      // Next combination.
      std::size_t i = pick.size();
      while (i > 0 && pick[i - 1] == gens.size() - pick.size() + i - 1) --i;
      if (i == 0) break;
      ++pick[i - 1];
      for (std::size_t j = i; j < pick.size(); ++j) pick[j] = pick[j - 1] + 1;
    }
    for (std::size_t f = 0; f < facet_normals.size(); ++f) {
      std::vector<const Vector*> on_facet;
      for (const auto& g : gens)
        if (dot(facet_normals[f], g).is_zero()) on_facet.push_back(&g);
      const std::string name = "Eff facet " + std::to_string(f + 1);
      std::vector<DivisorClass> seen;
      for (std::size_t attempt = 0; seen.size() < per_wall && attempt < 200 * per_wall; ++attempt) {
        DivisorClass point = DivisorClass::zero(r);
        for (const Vector* g : on_facet) point += Rational(sampler.next_int(1, 9)) * DivisorClass(*g);
        if (!insert_new(seen, point)) continue;
        out.push_back({name, point, ample});
        out.push_back({"-" + name, -point, ample});
      }
    }
  }

  // Zariski walls inside the big cone: P . C = 0 for a curve C outside the support.
  const auto chambers = enumerate_zariski_chambers(model_);
  for (const auto& chamber : chambers) {
    if (!chamber.witness) continue;
    for (std::size_t c = 0; c < model_.curves().size(); ++c) {
      if (contains(chamber.support, c)) continue;
      std::vector<std::size_t> wall_support = chamber.support;
      wall_support.push_back(c);
      std::vector<Vector> equalities;
      for (auto i : wall_support) equalities.push_back(pairing_functional(model_, model_.curves()[i].cls.coords()));
      std::vector<Vector> strict;
      for (const auto& g : gens) {
        bool on = false;
        for (auto i : wall_support) on = on || model_.curves()[i].cls.coords() == g;
        if (!on) strict.push_back(pairing_functional(model_, g));
      }
      const auto base = strict_feasible_point(equalities, strict);
      if (!base) continue;
      const auto face = nullspace(Matrix::from_rows(equalities));
      const std::string name = "Z" + support_label(chamber.support) + "|" + model_.curves()[c].name;
      std::vector<DivisorClass> seen;
      for (std::size_t attempt = 0; seen.size() < per_wall && attempt < 200 * per_wall; ++attempt) {
        DivisorClass positive = Rational(sampler.next_int(1, 3)) * DivisorClass(*base);
        for (const auto& k : face) positive += Rational(sampler.next_int(-1, 1), 10) * DivisorClass(k);
        bool ok = model_.intersect(positive, positive).sign() > 0;
        for (const auto& s : strict) ok = ok && dot(s, positive.coords()).sign() > 0;
        if (!ok) continue;
        DivisorClass point = positive;
        for (auto i : chamber.support) point += Rational(sampler.next_int(1, 3)) * model_.curves()[i].cls;
        if (!insert_new(seen, point)) continue;
        out.push_back({name, point, model_.curves()[c].cls});
        out.push_back({"-" + name, -point, -model_.curves()[c].cls});
      }
    }
  }
  return out;
}

std::vector<WallPoint> SurfaceVariety::quadric_wall_points(std::uint64_t seed, std::size_t per_wall) const {
  const std::size_t r = model_.rank();
  // An isotropic integer vector with small coordinates seeds a rational parametrisation
  // of the null cone: w = v - (v^2 / (2 e.v)) e satisfies w^2 = 0.
  std::optional<DivisorClass> isotropic;
  std::vector<int> digits(r, -2);
  while (!isotropic) {
    DivisorClass e = DivisorClass::zero(r);
    for (std::size_t i = 0; i < r; ++i) e[i] = digits[i];
    if (!e.is_zero() && model_.intersect(e, e).is_zero()) isotropic = e;
    std::size_t i = 0;
    while (i < r && digits[i] == 2) digits[i++] = -2;
    if (i == r) break;
    ++digits[i];
  }
  if (!isotropic) return {};
  RationalSampler sampler(seed);
  std::vector<WallPoint> out;
  const DivisorClass& ample = model_.ample();
  std::vector<DivisorClass> seen;
  for (std::size_t attempt = 0; seen.size() < per_wall && attempt < 200 * per_wall; ++attempt) {
    const DivisorClass v = sampler.next_class(r, 5, 1);
    const Rational ev = model_.intersect(*isotropic, v);
    if (ev.is_zero()) continue;
    DivisorClass w = v - (model_.intersect(v, v) / (2 * ev)) * *isotropic;
    if (w.is_zero()) continue;
    if (model_.intersect(w, ample).sign() < 0) w = -w;
    if (!insert_new(seen, w)) continue;
    out.push_back({"null cone", w, ample});
    out.push_back({"-null cone", -w, ample});
  }
  return out;
}

}  // namespace asymcoh::surface
