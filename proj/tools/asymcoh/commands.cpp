#include "asymcoh/commands.hpp"

#include <asymcoh/abelian/abelian_variety.hpp>
#include <asymcoh/core/harness.hpp>
#include <asymcoh/core/suites.hpp>
#include <asymcoh/error.hpp>
#include <asymcoh/flag/flag.hpp>
#include <asymcoh/flag/flag_variety.hpp>
#include <asymcoh/surface/surface_variety.hpp>

namespace asymcoh::cli {

namespace {

Json nullable_label(const std::optional<ChamberLabel>& label) {
  return label ? Json(*label) : Json(nullptr);
}

void certify(bool ok, const std::string& what) {
  if (!ok) throw Error("certificate check failed: " + what);
}

DivisorClass class_of_rank(const Vector& coords, std::size_t rank, const std::string& model) {
  if (coords.size() != rank) {
    throw DimensionMismatch("class has " + std::to_string(coords.size()) + " coordinates but " + model +
                            " has rank " + std::to_string(rank));
  }
  return DivisorClass(coords);
}

Json flag_model_json(const flag::RootSystem& rs) {
  Json roots = Json::array();
  for (const auto& r : rs.positive_roots()) roots.push_back(r);
  return Json{{"kind", "flag"},
              {"type", rs.label()},
              {"rank", rs.rank()},
              {"dimension", rs.num_positive_roots()},
              {"basis", flag::FlagVariety(rs).basis().labels()},
              {"positive_roots", roots}};
}

Json flag_oracle(const flag::RootSystem& rs, const DivisorClass& xi, unsigned max_m,
                 const CohomologyVector& h, const std::optional<unsigned>& index) {
  for (const auto& x : xi.coords()) {
    if (!is_integer(x)) throw InvalidArgument("the Borel-Weil-Bott oracle needs an integral class");
  }
  if (max_m == 0) throw InvalidArgument("--oracle needs M >= 1");
  const unsigned n = rs.num_positive_roots();
  std::vector<std::vector<std::pair<std::uint64_t, Rational>>> sequences(n + 1);
  for (unsigned m = 1; m <= max_m; ++m) {
    std::vector<Rational> dims(n + 1, Rational(0));
    for (const auto& [degree, dim] : flag::bwb_cohomology(rs, Rational(m) * xi)) dims[degree] = Rational(dim);
    for (unsigned i = 0; i <= n; ++i) sequences[i].emplace_back(m, dims[i]);
  }
  Vector limsup;
  Vector tail_max;
  for (unsigned i = 0; i <= n; ++i) {
    const LimsupEstimate est = limsup_estimate(sequences[i], n);
    limsup.push_back(est.value);
    tail_max.push_back(est.tail_max);
  }
  Json out{{"max_m", max_m}, {"limsup", vector_json(limsup)}, {"tail_max", vector_json(tail_max)}};
  if (index && !h[*index].is_zero()) {
    out["relative_error"] = rational_json(abs(limsup[*index] - h[*index]) / h[*index]);
  } else {
    out["relative_error"] = nullptr;
  }
  bool others_zero = true;
  for (unsigned i = 0; i <= n; ++i) {
    if ((!index || i != *index) && !limsup[i].is_zero()) others_zero = false;
  }
  out["other_degrees_zero"] = others_zero;
  return out;
}

std::string curve_names(const surface::SurfaceModel& m, const std::vector<std::size_t>& support, Json& out) {
  std::string joined;
  out = Json::array();
  for (auto i : support) {
    out.push_back(m.curves()[i].name);
    joined += (joined.empty() ? "" : ",") + m.curves()[i].name;
  }
  return joined;
}

Json surface_model_json(const std::string& name, const surface::SurfaceModel& m) {
  Json curves = Json::array();
  for (const auto& c : m.curves()) curves.push_back(c.name);
  return Json{{"kind", "surface"},
              {"name", name},
              {"rank", m.rank()},
              {"basis", m.basis_labels()},
              {"cone_mode", m.cone_mode() == surface::ConeMode::Polyhedral ? "polyhedral" : "quadric"},
              {"curves", curves}};
}

Json surface_chambers_json(const surface::SurfaceModel& m) {
  Json out = Json::array();
  for (const auto& c : surface::enumerate_zariski_chambers(m)) {
    Json names;
    curve_names(m, c.support, names);
    out.push_back(Json{{"support", names},
                       {"realizable", c.witness.has_value()},
                       {"witness", c.witness ? class_json(*c.witness) : Json(nullptr)}});
  }
  return out;
}

Json abelian_index_json(const std::optional<unsigned>& index) {
  return index ? Json(*index) : Json("Degenerate");
}

}  // namespace

int exit_code_for(const std::exception& e) {
  if (dynamic_cast<const ParseError*>(&e) || dynamic_cast<const InvalidArgument*>(&e) ||
      dynamic_cast<const DimensionMismatch*>(&e)) {
    return kParseError;
  }
  if (dynamic_cast<const UnsupportedType*>(&e) || dynamic_cast<const UnsupportedConeMode*>(&e)) {
    return kUnsupportedType;
  }
  if (dynamic_cast<const ModelValidationError*>(&e) || dynamic_cast<const IllConditionedModel*>(&e)) {
    return kValidationError;
  }
  if (dynamic_cast<const NotBig*>(&e)) return kNotBig;
  return kInternalError;
}

Json cmd_flag(const FlagOptions& opt) {
  const flag::RootSystem rs = flag::RootSystem::parse(opt.type);
  if (!opt.cls && !opt.chambers) throw InvalidArgument("flag needs --class or --chambers");
  Json report{{"command", "flag"}, {"model", flag_model_json(rs)}};
  if (opt.cls) {
    const DivisorClass xi = class_of_rank(*opt.cls, rs.rank(), rs.label());
    const unsigned n = rs.num_positive_roots();
    const flag::FlagVariety variety(rs);
    const CohomologyVector h = flag::flag_asym_h(rs, xi);
    const auto index = flag::asymptotic_index(rs, xi);
    Vector pairings;
    Vector rho_pairings;
    unsigned negatives = 0;
    bool on_wall = false;
    Rational product(factorial(n));
    for (std::size_t v = 0; v < n; ++v) {
      pairings.push_back(rs.coroot_pairing(xi.coords(), v));
      rho_pairings.push_back(rs.coroot_pairing(rs.rho(), v));
      negatives += pairings.back() < 0;
      on_wall = on_wall || pairings.back().is_zero();
      product *= pairings.back() / rho_pairings.back();
    }
    const Rational top = flag::top_self_intersection(rs, xi);
    certify(product == top, "top self-intersection");
    certify(on_wall != index.has_value(), "wall detection");
    certify(!index || *index == negatives, "index");
    certify(h.alternating_sum() == (on_wall ? Rational(0) : top), "Euler identity");
    report["class"] = class_json(xi);
    report["chamber"] = nullable_label(variety.chamber_id(xi));
    report["h"] = vector_json(h.values);
    report["certificates"] = Json{{"index", index ? Json(*index) : Json(nullptr)},
                                  {"on_wall", on_wall},
                                  {"coroot_pairings", vector_json(pairings)},
                                  {"rho_pairings", vector_json(rho_pairings)},
                                  {"top_intersection", rational_json(top)}};
    if (opt.oracle) report["oracle"] = flag_oracle(rs, xi, *opt.oracle, h, index);
  } else if (opt.oracle) {
    throw InvalidArgument("--oracle needs --class");
  }
  if (opt.chambers) {
    Json list = Json::array();
    for (const auto& c : flag::enumerate_chambers(rs)) {
      for (std::size_t v = 0; v < c.signs.size(); ++v) {
        const int s = sign(rs.coroot_pairing(c.witness, v));
        certify(s == (c.signs[v] == Sign::Positive ? 1 : -1), "chamber witness");
      }
      list.push_back(Json{{"signs", flag::sign_string(c.signs)}, {"index", c.index}, {"witness", vector_json(c.witness)}});
    }
    report["chamber_count"] = list.size();
    report["chambers"] = list;
  }
  return report;
}

Json cmd_surface(const SurfaceOptions& opt) {
  ModelDocument doc = load_model_document(opt.data);
  auto* sd = std::get_if<SurfaceDocument>(&doc);
  if (!sd) throw ParseError("'" + opt.data.string() + "' is not a surface model");
  const surface::SurfaceModel& m = sd->model;
  if (!opt.cls && !opt.chambers) throw InvalidArgument("surface needs --class or --chambers");
  Json report{{"command", "surface"}, {"model", surface_model_json(sd->name, m)}};
  if (opt.cls) {
    const DivisorClass d = class_of_rank(*opt.cls, m.rank(), sd->name);
    const surface::SurfaceVariety variety(sd->name, m);
    const surface::SurfaceEvaluation ev = surface::evaluate_surface(m, d);
    const Rational self = m.intersect(d, d);
    certify(ev.h.alternating_sum() == self, "Euler identity");
    certify(ev.h.all_nonnegative(), "nonnegativity");
    report["class"] = class_json(d);
    report["case"] = surface::to_string(ev.kase);
    if (ev.decomposition) {
      const auto& z = *ev.decomposition;
      const DivisorClass target = ev.kase == surface::SurfaceCase::PseudoEffective ? d : -d;
      surface::certify_decomposition(m, target, z);
      Json names;
      curve_names(m, z.support, names);
      report["decomposition"] = Json{{"of", ev.kase == surface::SurfaceCase::PseudoEffective ? "D" : "-D"},
                                     {"positive", class_json(z.positive)},
                                     {"negative", class_json(z.negative)},
                                     {"support", names},
                                     {"coefficients", vector_json(z.coefficients)},
                                     {"iterations", z.iterations}};
    } else {
      report["decomposition"] = nullptr;
    }
    report["h"] = vector_json(ev.h.values);
    report["self_intersection"] = rational_json(self);
    report["volume"] = rational_json(surface::volume(m, d));
    const bool big = surface::is_big(m, d);
    report["big"] = big;
    if (big) {
      report["zariski_chamber"] = surface::zariski_chamber(m, d);
    } else if (opt.zariski_chamber) {
      surface::zariski_chamber(m, d);
    } else {
      report["zariski_chamber"] = nullptr;
    }
    report["chamber"] = nullable_label(variety.chamber_id(d));
  } else if (opt.zariski_chamber) {
    throw InvalidArgument("--zariski-chamber needs --class");
  }
  if (opt.chambers) report["chambers"] = surface_chambers_json(m);
  return report;
}

Json cmd_abelian(const AbelianOptions& opt) {
  if (opt.exe.has_value() == opt.data.has_value()) throw InvalidArgument("abelian needs exactly one of --exe or --data");
  if (opt.exe) {
    if (opt.cls) throw InvalidArgument("--class is not used with --exe");
    const DivisorClass xi = class_of_rank(*opt.exe, 3, "E x E");
    const abelian::ExEPreset preset;
    const CohomologyVector h = preset.evaluate(xi);
    const Rational q = preset.top_intersection(xi);
    const Rational pf = pfaffian(abelian::elliptic_square_model().lattice_form(xi));
    certify(h.alternating_sum() == (abelian::exe_index(xi[0], xi[1], xi[2]) ? q : Rational(0)), "Euler identity");
    certify(2 * pf == q, "Pfaffian");
    return Json{{"command", "abelian"},
                {"model", Json{{"kind", "abelian"}, {"preset", "ExE"}, {"g", 2}, {"basis", preset.basis().labels()}}},
                {"class", class_json(xi)},
                {"index", abelian_index_json(abelian::exe_index(xi[0], xi[1], xi[2]))},
                {"h", vector_json(h.values)},
                {"pfaffian", rational_json(pf)},
                {"self_intersection", rational_json(q)}};
  }
  ModelDocument doc = load_model_document(*opt.data);
  auto* ad = std::get_if<AbelianDocument>(&doc);
  if (!ad) throw ParseError("'" + opt.data->string() + "' is not an abelian model");
  if (!opt.cls) throw InvalidArgument("abelian --data needs --class");
  const abelian::AbelianModel& m = ad->model;
  const DivisorClass xi = class_of_rank(*opt.cls, m.rank(), ad->name);
  const auto index = abelian::hermitian_index(m, xi);
  const CohomologyVector h = abelian::abelian_asym_h(m, xi);
  const Rational pf = pfaffian(m.lattice_form(xi));
  const Rational top = abelian::abelian_top_intersection(m, xi);
  certify(index.has_value() != pf.is_zero(), "degeneracy");
  certify(h.alternating_sum() == top, "Euler identity");
  return Json{{"command", "abelian"},
              {"model", Json{{"kind", "abelian"}, {"name", ad->name}, {"g", m.g()}, {"rank", m.rank()}}},
              {"class", class_json(xi)},
              {"index", abelian_index_json(index)},
              {"h", vector_json(h.values)},
              {"pfaffian", rational_json(pf)},
              {"orientation", m.orientation()},
              {"top_intersection", rational_json(top)}};
}

std::unique_ptr<VarietyModel> resolve_target(const CheckOptions& opt) {
  const int chosen = opt.type.has_value() + opt.data.has_value() + opt.exe;
  if (chosen != 1) throw InvalidArgument("check needs exactly one of --type, --data or --exe");
  if (opt.type) return std::make_unique<flag::FlagVariety>(flag::RootSystem::parse(*opt.type));
  if (opt.exe) return std::make_unique<abelian::ExEPreset>();
  ModelDocument doc = load_model_document(*opt.data);
  if (auto* f = std::get_if<FlagDocument>(&doc)) return std::make_unique<flag::FlagVariety>(f->root_system);
  if (auto* s = std::get_if<SurfaceDocument>(&doc)) return std::make_unique<surface::SurfaceVariety>(s->name, s->model);
  auto& a = std::get<AbelianDocument>(doc);
  return std::make_unique<abelian::AbelianVariety>(a.name, a.model);
}

CheckResult cmd_check(const CheckOptions& opt) {
  std::vector<Suite> suites;
  if (opt.suite == "all") {
    suites = all_suites();
  } else if (auto s = parse_suite(opt.suite)) {
    suites.push_back(*s);
  } else {
    throw InvalidArgument("unknown suite '" + opt.suite + "'");
  }
  if (opt.samples == 0) throw InvalidArgument("--samples must be positive");
  const auto model = resolve_target(opt);
  CheckResult result;
  result.passed = true;
  Json outcomes = Json::array();
  std::optional<Rational> lipschitz;
  for (Suite s : suites) {
    const SuiteOutcome o = run_suite(*model, s, SuiteOptions{opt.seed, opt.samples});
    Json metrics = Json::object();
    for (const auto& metric : o.metrics) {
      metrics[metric.name] = rational_json(metric.value);
      if (s == Suite::Lipschitz && metric.name == "constant") lipschitz = metric.value;
    }
    outcomes.push_back(Json{{"suite", o.suite},
                            {"passed", o.passed},
                            {"checks", o.checks},
                            {"metrics", metrics},
                            {"witness", o.witness ? Json(*o.witness) : Json(nullptr)}});
    if (!o.passed && result.passed) {
      result.passed = false;
      result.witness = o.suite + ": " + o.witness.value_or("no witness");
    }
  }
  result.report = Json{{"command", "check"},
                       {"model", Json{{"name", model->name()}, {"rank", model->rank()}, {"dimension", model->dimension()}}},
                       {"seed", opt.seed},
                       {"samples", opt.samples},
                       {"suites", outcomes},
                       {"lipschitz_constant", lipschitz ? rational_json(*lipschitz) : Json(nullptr)},
                       {"passed", result.passed}};
  return result;
}

}  // namespace asymcoh::cli
