// Acceptance run: one PASS/FAIL line per criterion, exit status 0 iff all pass.
// Pass --update-golden to rewrite the archived Lipschitz report.

#include "asymcoh/json_io.hpp"

#include <asymcoh/abelian/abelian_variety.hpp>
#include <asymcoh/core/harness.hpp>
#include <asymcoh/core/sampling.hpp>
#include <asymcoh/core/suites.hpp>
#include <asymcoh/flag/flag.hpp>
#include <asymcoh/flag/flag_variety.hpp>
#include <asymcoh/surface/surface_variety.hpp>

#include <algorithm>
#include <chrono>
#include <cstring>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <memory>
#include <sstream>

using namespace asymcoh;
using asymcoh::cli::Json;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool passed = false;
  std::string detail;
};

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fmt_seconds(double s) {
  std::ostringstream os;
  os.precision(3);
  os << s << " s";
  return os.str();
}

struct ShippedModel {
  std::string file;
  std::unique_ptr<VarietyModel> model;
};

std::unique_ptr<VarietyModel> load_variety(const std::string& file) {
  auto doc = cli::load_model_document(std::string(ASYMCOH_MODELS_DIR) + "/" + file);
  if (auto* f = std::get_if<cli::FlagDocument>(&doc)) return std::make_unique<flag::FlagVariety>(f->root_system);
  if (auto* s = std::get_if<cli::SurfaceDocument>(&doc)) {
    return std::make_unique<surface::SurfaceVariety>(s->name, s->model);
  }
  auto& a = std::get<cli::AbelianDocument>(doc);
  return std::make_unique<abelian::AbelianVariety>(a.name, a.model);
}

std::vector<ShippedModel> shipped_models() {
  std::vector<ShippedModel> out;
  for (const char* f : {"a2.json", "blp1.json", "blp2.json", "exe.json", "exe_abelian.json", "elliptic_g1.json"}) {
    out.push_back({f, load_variety(f)});
  }
  out.push_back({"ExE preset", std::make_unique<abelian::ExEPreset>()});
  return out;
}

surface::SurfaceModel load_surface(const std::string& file) {
  auto doc = cli::load_model_document(std::string(ASYMCOH_MODELS_DIR) + "/" + file);
  return std::get<cli::SurfaceDocument>(doc).model;
}

// 1. Chamber census of the A2 arrangement.
Outcome chamber_census() {
  const auto start = Clock::now();
  const auto chambers = flag::enumerate_chambers(flag::RootSystem::parse("A2"));
  const double t = seconds_since(start);
  std::vector<unsigned> indices;
  for (const auto& c : chambers) indices.push_back(c.index);
  std::sort(indices.begin(), indices.end());
  const bool ok = chambers.size() == 6 && indices == std::vector<unsigned>{0, 1, 1, 2, 2, 3} && t < 1.0;
  std::string list;
  for (auto i : indices) list += (list.empty() ? "" : ",") + std::to_string(i);
  return {ok, std::to_string(chambers.size()) + " chambers, indices {" + list + "}, " + fmt_seconds(t) +
                  " (limit 1 s)"};
}

// 2. Borel-Weil-Bott limsup proxy against the closed form on A2.
Outcome flag_oracle() {
  const auto start = Clock::now();
  const flag::RootSystem rs = flag::RootSystem::parse("A2");
  const unsigned n = rs.num_positive_roots();
  const Rational tolerance(5, 200);
  bool ok = true;
  Rational worst = 0;
  for (const DivisorClass& alpha : {DivisorClass{1, 1}, DivisorClass{2, -1}, DivisorClass{-1, -1}}) {
    const CohomologyVector h = flag::flag_asym_h(rs, alpha);
    const auto index = flag::asymptotic_index(rs, alpha);
    if (!index) return {false, "class " + alpha.to_string() + " unexpectedly on a wall"};
    std::vector<std::pair<std::uint64_t, Rational>> at_index;
    for (unsigned m = 1; m <= 200; ++m) {
      Rational value = 0;
      for (const auto& [degree, dim] : flag::bwb_cohomology(rs, Rational(m) * alpha)) {
        if (degree == *index) {
          value = Rational(dim);
        } else if (dim != 0) {
          ok = false;
        }
      }
      at_index.emplace_back(m, value);
    }
    for (unsigned i = 0; i <= n; ++i) {
      if (i != *index && !h[i].is_zero()) ok = false;
    }
    const LimsupEstimate est = limsup_estimate(at_index, n);
    const Rational rel = abs(est.value - h[*index]) / h[*index];
    worst = std::max(worst, rel);
    if (rel > tolerance) ok = false;
  }
  const double t = seconds_since(start);
  ok = ok && t < 5.0;
  return {ok, "max relative gap " + to_decimal(worst) + " (tolerance 5/200), other degrees zero, " + fmt_seconds(t) +
                  " (limit 5 s)"};
}

// Pseudo-effective classes on a rational grid of nonnegative generator combinations.
std::vector<DivisorClass> pseff_grid(const surface::SurfaceModel& m, std::size_t count) {
  const auto gens = m.effective_generators();
  const std::vector<Rational> steps{0, Rational(1, 3), Rational(1, 2), 1, Rational(3, 2), 2, Rational(5, 2), 4};
  std::vector<DivisorClass> out;
  std::vector<std::size_t> digits(gens.size(), 0);
  std::vector<DivisorClass> all;
  for (;;) {
    DivisorClass d = DivisorClass::zero(m.rank());
    for (std::size_t g = 0; g < gens.size(); ++g) d += steps[digits[g]] * DivisorClass(gens[g]);
    if (!d.is_zero() && std::find(all.begin(), all.end(), d) == all.end()) all.push_back(d);
    std::size_t i = 0;
    while (i < digits.size() && digits[i] == steps.size() - 1) digits[i++] = 0;
    if (i == digits.size()) break;
    ++digits[i];
  }
  // Also step along the ample class.
  for (std::size_t k = 0; all.size() < count && k < 4 * count; ++k) {
    all.push_back(Rational(static_cast<long>(k % 7 + 1), 3) * m.ample() + all[k % all.size()]);
  }
  const std::size_t stride = std::max<std::size_t>(1, all.size() / count);
  for (std::size_t i = 0; i < all.size() && out.size() < count; i += stride) out.push_back(all[i]);
  return out;
}

// 3. Zariski certificates and the brute-force subset oracle.
Outcome zariski_uniqueness() {
  const auto start = Clock::now();
  std::size_t tested = 0;
  for (const char* file : {"blp1.json", "blp2.json"}) {
    const surface::SurfaceModel m = load_surface(file);
    const std::size_t k = m.curves().size();
    const auto grid = pseff_grid(m, 500);
    if (grid.size() != 500) return {false, std::string(file) + ": grid has only " + std::to_string(grid.size())};
    for (const auto& d : grid) {
      if (!surface::is_pseff(m, d)) return {false, d.to_string() + " is not pseudo-effective"};
      const auto z = surface::zariski_decompose(m, d);
      ++tested;
      if (!surface::is_nef(m, z.positive)) return {false, "P not nef at " + d.to_string()};
      if (!m.intersect(z.positive, z.negative).is_zero()) return {false, "P.N != 0 at " + d.to_string()};
      if (!z.support.empty() && !is_negative_definite(m.curve_gram(z.support))) {
        return {false, "support not negative definite at " + d.to_string()};
      }
      std::size_t solutions = 0;
      bool matches = false;
      for (std::uint32_t mask = 0; mask < (1u << k); ++mask) {
        std::vector<std::size_t> s;
        for (std::size_t i = 0; i < k; ++i)
          if (mask & (1u << i)) s.push_back(i);
        if (!s.empty() && !is_negative_definite(m.curve_gram(s))) continue;
        const auto cand = surface::decomposition_on_support(m, d, s);
        const bool positive = std::all_of(cand.coefficients.begin(), cand.coefficients.end(),
                                          [](const Rational& a) { return a > 0; });
        if (!positive || !surface::is_nef(m, cand.positive)) continue;
        ++solutions;
        matches = cand.support == z.support && cand.positive == z.positive && cand.negative == z.negative;
      }
      if (solutions != 1 || !matches) {
        return {false, "oracle found " + std::to_string(solutions) + " solutions at " + d.to_string()};
      }
    }
  }
  const double t = seconds_since(start);
  return {t < 30.0, std::to_string(tested) + " classes on Bl1P2 and Bl2P2, unique oracle match, " + fmt_seconds(t) +
                        " (limit 30 s)"};
}

// 4. Euler identity on every surface model, covering all three cases.
Outcome euler_identity() {
  const auto start = Clock::now();
  std::string detail;
  bool ok = true;
  for (const char* file : {"blp1.json", "blp2.json", "exe.json"}) {
    const surface::SurfaceModel m = load_surface(file);
    std::map<surface::SurfaceCase, std::size_t> cases;
    for (const auto& d : sample_classes(m.rank(), 1000, 4)) {
      const auto ev = surface::evaluate_surface(m, d);
      ++cases[ev.kase];
      if (ev.h.alternating_sum() != m.intersect(d, d) || !ev.h.all_nonnegative()) {
        return {false, std::string(file) + " fails at " + d.to_string()};
      }
    }
    ok = ok && cases.size() == 3;
    detail += std::string(detail.empty() ? "" : "; ") + file + " " +
              std::to_string(cases[surface::SurfaceCase::PseudoEffective]) + "/" +
              std::to_string(cases[surface::SurfaceCase::AntiPseudoEffective]) + "/" +
              std::to_string(cases[surface::SurfaceCase::Neither]);
  }
  const double t = seconds_since(start);
  return {ok && t < 10.0, "1000 classes per model, pseff/anti/neither = " + detail + ", exact, " + fmt_seconds(t) +
                              " (limit 10 s)"};
}

// 5. Worked values.
Outcome worked_values() {
  const surface::SurfaceModel bl1 = load_surface("blp1.json");
  auto g1 = cli::load_model_document(std::string(ASYMCOH_MODELS_DIR) + "/elliptic_g1.json");
  const auto& elliptic = std::get<cli::AbelianDocument>(g1).model;
  struct Case {
    std::string name;
    CohomologyVector got;
    CohomologyVector expected;
  };
  const std::vector<Case> cases{
      {"Bl1P2 3H+E", surface::surface_asym_h(bl1, {3, 1}), CohomologyVector{{9, 1, 0}}},
      {"Bl1P2 H-3E", surface::surface_asym_h(bl1, {1, -3}), CohomologyVector{{0, 8, 0}}},
      {"ExE (1,1,1)", abelian::exe_asym_h(1, 1, 1), CohomologyVector{{6, 0, 0}}},
      {"ExE (1,1,-1)", abelian::exe_asym_h(1, 1, -1), CohomologyVector{{0, 2, 0}}},
      {"g=1 H=[2]", abelian::abelian_asym_h(elliptic, DivisorClass{1}), CohomologyVector{{2, 0}}},
  };
  bool ok = true;
  std::string detail;
  for (const auto& c : cases) {
    ok = ok && c.got == c.expected;
    detail += (detail.empty() ? "" : ", ") + c.name + " -> " + c.got.to_string();
  }
  // h^0(mL) = 2m for the degree-2 bundle, normalised by m^1 / 1!.
  for (unsigned m = 1; m <= 50; ++m) ok = ok && Rational(2 * m, m) == cases.back().got[0];
  return {ok, detail + ", exact"};
}

// 6. Homogeneity on all shipped models.
Outcome homogeneity() {
  const auto start = Clock::now();
  std::size_t checks = 0;
  for (const auto& s : shipped_models()) {
    const auto outcome = run_suite(*s.model, Suite::Homogeneity, SuiteOptions{6, 200});
    checks += outcome.checks;
    if (!outcome.passed) return {false, s.file + ": " + outcome.witness.value_or("")};
  }
  const double t = seconds_since(start);
  return {t < 10.0, std::to_string(checks) + " exact checks (7 models x 200 classes x m=1..8), " + fmt_seconds(t) +
                        " (limit 10 s)"};
}

// 7. Wall continuity with at least rank + 1 points per enumerated wall.
Outcome wall_continuity() {
  std::vector<std::unique_ptr<VarietyModel>> models;
  models.push_back(load_variety("a2.json"));
  models.push_back(load_variety("blp1.json"));
  models.push_back(load_variety("blp2.json"));
  models.push_back(load_variety("exe.json"));
  models.push_back(std::make_unique<abelian::ExEPreset>());
  const std::vector<unsigned> denominators{7, 100, 1000};
  std::size_t walls = 0;
  std::size_t points = 0;
  for (const auto& m : models) {
    const std::size_t need = m->rank() + 1;
    std::map<std::string, std::vector<DivisorClass>> per_wall;
    for (const auto& w : m->wall_points(7, need)) {
      const DivisorClass dir[] = {w.direction};
      const auto r = check_wall_continuity(*m, w.point, dir, denominators);
      if (!r.passed) return {false, m->name() + " wall " + w.wall + " at " + w.point.to_string() + ": " + r.diagnostic};
      auto& seen = per_wall[w.wall];
      if (std::find(seen.begin(), seen.end(), w.point) == seen.end()) seen.push_back(w.point);
      ++points;
    }
    if (per_wall.empty()) return {false, m->name() + " has no walls"};
    for (const auto& [wall, seen] : per_wall) {
      if (seen.size() < need) {
        return {false, m->name() + " wall " + wall + " has only " + std::to_string(seen.size()) + " distinct points"};
      }
    }
    walls += per_wall.size();
  }
  return {true, std::to_string(walls) + " walls on A2, Bl1P2, Bl2P2, ExE (surface and preset), " +
                    std::to_string(points) + " points, exact agreement"};
}

// 8. Lipschitz constants: finite, stable within a factor of two, archived.
Outcome lipschitz(bool update_golden) {
  Json report = Json::array();
  bool ok = true;
  for (const auto& s : shipped_models()) {
    const auto first = sample_pairs(s.model->rank(), 500, 100);
    const auto second = sample_pairs(s.model->rank(), 500, 200);
    const auto a = check_lipschitz(*s.model, first, 0);
    const auto b = check_lipschitz(*s.model, second, 0);
    const Rational hi = std::max(a.max_ratio, b.max_ratio);
    const Rational lo = std::min(a.max_ratio, b.max_ratio);
    const bool stable = lo > 0 && hi <= 2 * lo;
    ok = ok && stable;
    report.push_back(Json{{"model", s.file},
                          {"pairs", 500},
                          {"constant_seed_100", cli::rational_json(a.max_ratio)},
                          {"constant_seed_200", cli::rational_json(b.max_ratio)},
                          {"ratio", cli::rational_json(lo > 0 ? hi / lo : Rational(0))},
                          {"stable", stable}});
  }
  const std::string text = report.dump(2) + "\n";
  const std::string path = std::string(ASYMCOH_GOLDEN_DIR) + "/lipschitz_report.json";
  if (update_golden) cli::write_atomically(path, text);
  std::ifstream in(path);
  const std::string golden((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  const bool archived = golden == text;
  Rational worst = 0;
  for (const auto& r : report) worst = std::max(worst, parse_rational(r["ratio"]["exact"].get<std::string>()));
  return {ok && archived, "7 models x 500 pairs, worst seed-to-seed ratio " + to_decimal(worst) +
                              " (limit 2), golden report " + (archived ? "matches" : "differs")};
}

// 9. Telescoping bound with calibrated per-direction constants.
Outcome telescoping() {
  std::size_t pairs_tested = 0;
  std::size_t violations = 0;
  for (const char* file : {"a2.json", "blp1.json"}) {
    const auto model = load_variety(file);
    const unsigned n = model->dimension();
    const auto hypotheses = sample_direction_hypotheses(model->rank(), 100, 31);
    const auto pairs = sample_pairs(model->rank(), 100, 32);
    for (unsigned i = 0; i <= n; ++i) {
      const ClassFunction f = [&model, i](const DivisorClass& d) { return model->evaluate(d)[i]; };
      const auto constants = calibrate_direction_constants(f, n, model->basis(), hypotheses);
      const auto r = check_telescoping_bound(f, n, model->basis(), constants, hypotheses, pairs);
      pairs_tested += r.pairs_tested;
      violations += r.violations.size();
    }
  }
  return {violations == 0, std::to_string(pairs_tested) + " (pair, degree) checks on A2 and Bl1P2 after 100-sample "
                               "calibration, " + std::to_string(violations) + " violations"};
}

}  // namespace

int main(int argc, char** argv) {
  const bool update_golden = argc > 1 && std::strcmp(argv[1], "--update-golden") == 0;
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"1 A2 chamber census", chamber_census},
      {"2 flag oracle equivalence", flag_oracle},
      {"3 Zariski certificate and uniqueness", zariski_uniqueness},
      {"4 Euler identity on surfaces", euler_identity},
      {"5 worked values", worked_values},
      {"6 homogeneity", homogeneity},
      {"7 wall continuity", wall_continuity},
      {"8 Lipschitz estimate", [&] { return lipschitz(update_golden); }},
      {"9 telescoping bound", telescoping},
  };
  int failures = 0;
  for (const auto& [name, run] : criteria) {
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failures += !o.passed;
    std::cout << (o.passed ? "PASS" : "FAIL") << "  criterion " << name << ": " << o.detail << std::endl;
  }
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << std::endl;
  return failures == 0 ? 0 : 1;
}
