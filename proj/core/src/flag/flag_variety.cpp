#include <asymcoh/core/sampling.hpp>
#include <asymcoh/error.hpp>
#include <asymcoh/flag/flag.hpp>
#include <asymcoh/flag/flag_variety.hpp>

#include <algorithm>

namespace asymcoh::flag {

FlagVariety::FlagVariety(RootSystem rs) : rs_(std::move(rs)) {}

NormedBasis FlagVariety::basis() const {
  std::vector<std::string> labels;
  for (unsigned i = 1; i <= rs_.rank(); ++i) labels.push_back("omega" + std::to_string(i));
  return NormedBasis(std::move(labels));
}

CohomologyVector FlagVariety::evaluate(const DivisorClass& xi) const { return flag_asym_h(rs_, xi); }

std::optional<ChamberLabel> FlagVariety::chamber_id(const DivisorClass& xi) const {
  if (xi.rank() != rs_.rank()) throw DimensionMismatch("class rank does not match " + rs_.label());
  ChamberLabel label;
  for (std::size_t v = 0; v < rs_.num_positive_roots(); ++v) {
    const int s = sign(rs_.coroot_pairing(xi.coords(), v));
    if (s == 0) return std::nullopt;
    label += s > 0 ? '+' : '-';
  }
  return label;
}

Vector FlagVariety::chamber_polynomial(const ChamberLabel& label, const DivisorClass& xi) const {
  if (label.size() != rs_.num_positive_roots()) throw InvalidArgument("bad chamber label '" + label + "'");
  unsigned index = 0;
  for (char c : label) {
    if (c == '-') ++index;
    else if (c != '+') throw InvalidArgument("bad chamber label '" + label + "'");
  }
  Vector values(dimension() + 1, Rational(0));
  const Rational top = top_self_intersection(rs_, xi);
  values[index] = index % 2 == 0 ? top : Rational(-top);
  return values;
}

Rational FlagVariety::top_intersection(const DivisorClass& xi) const { return top_self_intersection(rs_, xi); }

Rational FlagVariety::norm_bound_constant() const {
  // |<alpha, v^vee>| <= |alpha|_max * |normal_v|_1 for every factor.
  const Vector rho = rs_.rho();
  Rational c(factorial(dimension()));
  for (std::size_t v = 0; v < rs_.num_positive_roots(); ++v) {
    Rational l1 = 0;
    for (const auto& x : rs_.coroot_normal(v)) l1 += abs(x);
    c *= l1 / rs_.coroot_pairing(rho, v);
  }
  return c;
}

std::vector<WallPoint> FlagVariety::wall_points(std::uint64_t seed, std::size_t per_wall) const {
  RationalSampler sampler(seed);
  std::vector<WallPoint> out;
  const std::size_t r = rs_.rank();
  for (std::size_t v = 0; v < rs_.num_positive_roots(); ++v) {
    const Vector& normal = rs_.coroot_normal(v);
    const std::string wall = "H_v" + std::to_string(v + 1);
    const auto kernel = nullspace(Matrix::from_rows({normal}));
    if (kernel.empty()) {
      out.push_back({wall, DivisorClass::zero(r), DivisorClass(normal)});
      continue;
    }
    std::size_t produced = 0;
    for (std::size_t attempt = 0; produced < per_wall && attempt < 1000 * per_wall; ++attempt) {
      Vector p(r, Rational(0));
      for (const auto& k : kernel) {
        const Rational c = sampler.next_int(-6, 6);
        for (std::size_t j = 0; j < r; ++j) p[j] += c * k[j];
      }
      bool generic = false;
      for (const auto& x : p) generic = generic || !x.is_zero();
      for (std::size_t w = 0; generic && w < rs_.num_positive_roots(); ++w) {
        if (w != v && rs_.coroot_pairing(p, w).is_zero()) generic = false;
      }
      if (!generic) continue;
      DivisorClass point(std::move(p));
      if (std::any_of(out.end() - static_cast<std::ptrdiff_t>(produced), out.end(),
                      [&](const WallPoint& w) { return w.point == point; })) {
        continue;
      }
      out.push_back({wall, std::move(point), DivisorClass(normal)});
      ++produced;
    }
  }
  return out;
}

}  // namespace asymcoh::flag
