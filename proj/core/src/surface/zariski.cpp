#include <asymcoh/core/parallel.hpp>
#include <asymcoh/error.hpp>
#include <asymcoh/exactlin/lp.hpp>
#include <asymcoh/surface/zariski.hpp>

#include <algorithm>

namespace asymcoh::surface {
namespace {

void require_rank(const SurfaceModel& model, const DivisorClass& d) {
  if (d.rank() != model.rank()) {
    throw DimensionMismatch("class of rank " + std::to_string(d.rank()) + " on a surface of rank " +
                            std::to_string(model.rank()));
  }
}

// Linear functional x -> x . c on coordinates.
Vector pairing_functional(const SurfaceModel& model, const DivisorClass& c) {
  return model.gram().matrix() * c.coords();
}

}  // namespace

bool is_nef(const SurfaceModel& model, const DivisorClass& d) {
  require_rank(model, d);
  if (model.cone_mode() == ConeMode::Quadric) {
    return model.intersect(d, d).sign() >= 0 && model.intersect(d, model.ample()).sign() >= 0;
  }
  for (const auto& g : model.mori_generators())
    if (model.intersect(d, g).sign() < 0) return false;
  for (const auto& c : model.curves())
    if (model.intersect(d, c.cls).sign() < 0) return false;
  return true;
}

bool is_pseff(const SurfaceModel& model, const DivisorClass& d) {
  require_rank(model, d);
  if (model.cone_mode() == ConeMode::Quadric) return is_nef(model, d);
  if (d.is_zero()) return true;
  const auto gens = model.effective_generators();
  return cone_member(gens, d.coords());
}

ZariskiDecomposition decomposition_on_support(const SurfaceModel& model, const DivisorClass& d,
                                              const std::vector<std::size_t>& support) {
  require_rank(model, d);
  ZariskiDecomposition z;
  z.support = support;
  z.negative = DivisorClass::zero(model.rank());
  if (!support.empty()) {
    Vector rhs;
    for (auto i : support) rhs.push_back(model.intersect(d, model.curves()[i].cls));
    z.coefficients = solve_symmetric(model.curve_gram(support), rhs);
    for (std::size_t k = 0; k < support.size(); ++k) {
      z.negative += z.coefficients[k] * model.curves()[support[k]].cls;
    }
  }
  z.positive = d - z.negative;
  return z;
}

void certify_decomposition(const SurfaceModel& model, const DivisorClass& d,
                           const ZariskiDecomposition& z) {
  auto fail = [&](const std::string& why) {
    throw IllConditionedModel("Zariski certificate failed for " + d.to_string() + ": " + why);
  };
  if (z.positive + z.negative != d) fail("P + N != D");
  if (z.coefficients.size() != z.support.size()) fail("coefficient count");
  DivisorClass n = DivisorClass::zero(model.rank());
  for (std::size_t k = 0; k < z.support.size(); ++k) {
    if (z.coefficients[k].sign() <= 0) fail("non-positive coefficient");
    n += z.coefficients[k] * model.curves()[z.support[k]].cls;
    if (!model.intersect(z.positive, model.curves()[z.support[k]].cls).is_zero()) fail("P . N_i != 0");
  }
  if (n != z.negative) fail("N does not match its coefficients");
  if (!z.support.empty() && !is_negative_definite(model.curve_gram(z.support))) {
    fail("support Gram matrix is not negative definite");
  }
  if (!model.intersect(z.positive, z.negative).is_zero()) fail("P . N != 0");
  if (!is_nef(model, z.positive)) fail("P is not nef");
}

ZariskiDecomposition zariski_decompose(const SurfaceModel& model, const DivisorClass& d) {
  if (!is_pseff(model, d)) throw NotPseudoEffective(d.to_string() + " is not pseudo-effective");
  std::vector<std::size_t> support;
  ZariskiDecomposition z = decomposition_on_support(model, d, support);
  std::vector<std::vector<std::size_t>> history;
  std::size_t iterations = 0;
  while (true) {
    std::vector<std::size_t> added;
    for (std::size_t i = 0; i < model.curves().size(); ++i) {
      if (std::find(support.begin(), support.end(), i) != support.end()) continue;
      if (model.intersect(z.positive, model.curves()[i].cls).sign() < 0) added.push_back(i);
    }
    if (added.empty()) break;
    support.insert(support.end(), added.begin(), added.end());
    std::sort(support.begin(), support.end());
    if (!is_negative_definite(model.curve_gram(support))) {
      throw IllConditionedModel("support Gram matrix became indefinite; the curve list is inconsistent");
    }
    z = decomposition_on_support(model, d, support);
    ++iterations;
    history.push_back(support);
    if (iterations > model.curves().size()) throw IllConditionedModel("support growth did not terminate");
  }
  for (const auto& a : z.coefficients) {
    if (a.sign() < 0) throw IllConditionedModel("negative coefficient in the negative part");
  }
  // Curves that entered with coefficient zero leave the support.
  ZariskiDecomposition out;
  out.positive = z.positive;
  out.negative = z.negative;
  for (std::size_t k = 0; k < z.support.size(); ++k) {
    if (z.coefficients[k].is_zero()) continue;
    out.support.push_back(z.support[k]);
    out.coefficients.push_back(z.coefficients[k]);
  }
  out.iterations = iterations;
  out.support_history = std::move(history);
  if (!is_nef(model, out.positive)) {
    throw IllConditionedModel("positive part of " + d.to_string() +
                              " is not nef; the curve list does not generate the effective cone");
  }
  certify_decomposition(model, d, out);
  return out;
}

std::string to_string(SurfaceCase c) {
  switch (c) {
    case SurfaceCase::PseudoEffective: return "pseff";
    case SurfaceCase::AntiPseudoEffective: return "anti-pseff";
    case SurfaceCase::Neither: return "neither";
  }
  return "unknown";
}

SurfaceEvaluation evaluate_surface(const SurfaceModel& model, const DivisorClass& d) {
  require_rank(model, d);
  SurfaceEvaluation e;
  e.h = CohomologyVector::zeros(2);
  if (is_pseff(model, d)) {
    e.kase = SurfaceCase::PseudoEffective;
    e.decomposition = zariski_decompose(model, d);
    e.h.values[0] = model.intersect(e.decomposition->positive, e.decomposition->positive);
    e.h.values[1] = -model.intersect(e.decomposition->negative, e.decomposition->negative);
  } else if (const DivisorClass neg = -d; is_pseff(model, neg)) {
    e.kase = SurfaceCase::AntiPseudoEffective;
    e.decomposition = zariski_decompose(model, neg);
    e.h.values[1] = -model.intersect(e.decomposition->negative, e.decomposition->negative);
    e.h.values[2] = model.intersect(e.decomposition->positive, e.decomposition->positive);
  } else {
    e.kase = SurfaceCase::Neither;
    e.h.values[1] = -model.intersect(d, d);
  }
  return e;
}

CohomologyVector surface_asym_h(const SurfaceModel& model, const DivisorClass& d) {
  return evaluate_surface(model, d).h;
}

Rational volume(const SurfaceModel& model, const DivisorClass& d) {
  require_rank(model, d);
  if (!is_pseff(model, d)) return 0;
  const auto z = zariski_decompose(model, d);
  return model.intersect(z.positive, z.positive);
}

bool is_big(const SurfaceModel& model, const DivisorClass& d) { return volume(model, d).sign() > 0; }

std::vector<std::string> zariski_chamber(const SurfaceModel& model, const DivisorClass& d) {
  if (!is_big(model, d)) throw NotBig(d.to_string() + " is not big");
  const auto z = zariski_decompose(model, d);
  std::vector<std::string> names;
  for (auto i : z.support) names.push_back(model.curves()[i].name);
  std::sort(names.begin(), names.end());
  return names;
}

std::vector<ZariskiChamber> enumerate_zariski_chambers(const SurfaceModel& model) {
  if (model.cone_mode() != ConeMode::Polyhedral) {
    throw UnsupportedConeMode("Zariski chamber enumeration needs a polyhedral effective cone");
  }
  const std::size_t k = model.curves().size();
  if (k > 20) throw InvalidArgument("too many negative curves for subset enumeration");
  const auto gens = model.effective_generators();

  auto chambers = parallel_map(std::size_t{1} << k, [&](std::size_t mask) -> std::optional<ZariskiChamber> {
    std::vector<std::size_t> support;
    for (std::size_t i = 0; i < k; ++i)
      if ((mask >> i) & 1u) support.push_back(i);
    if (!support.empty() && !is_negative_definite(model.curve_gram(support))) return std::nullopt;

    ZariskiChamber chamber{support, std::nullopt};
    std::vector<Vector> equalities;
    for (auto i : support) equalities.push_back(pairing_functional(model, model.curves()[i].cls));
    std::vector<Vector> strict;
    for (const auto& g : gens) {
      bool in_support = false;
      for (auto i : support) in_support = in_support || model.curves()[i].cls.coords() == g;
      if (!in_support) strict.push_back(pairing_functional(model, DivisorClass(g)));
    }
    const auto p = strict_feasible_point(equalities, strict);
    if (!p) return chamber;
    const DivisorClass positive(*p);
    if (model.intersect(positive, positive).sign() <= 0) return chamber;
    DivisorClass witness = positive;
    for (auto i : support) witness += model.curves()[i].cls;
    const auto z = zariski_decompose(model, witness);
    if (z.support != support) {
      throw IllConditionedModel("chamber witness " + witness.to_string() + " decomposes with a different support");
    }
    chamber.witness = std::move(witness);
    return chamber;
  });

  std::vector<ZariskiChamber> out;
  for (auto& c : chambers)
    if (c) out.push_back(std::move(*c));
  return out;
}

}  // namespace asymcoh::surface
