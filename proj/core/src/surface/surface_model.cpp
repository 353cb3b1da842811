#include <asymcoh/error.hpp>
#include <asymcoh/exactlin/lp.hpp>
#include <asymcoh/surface/surface_model.hpp>

namespace asymcoh::surface {

SurfaceModel SurfaceModel::create(std::vector<std::string> basis_labels, SymMatrix gram,
                                  std::vector<NegativeCurve> curves, ConeMode mode,
                                  std::vector<DivisorClass> mori, DivisorClass ample) {
  const std::size_t r = gram.dimension();
  if (r == 0) throw ModelValidationError("surface model must have rank >= 1");
  if (basis_labels.empty()) {
    for (std::size_t i = 0; i < r; ++i) basis_labels.push_back("b" + std::to_string(i + 1));
  }
  if (basis_labels.size() != r) throw ModelValidationError("basis label count does not match rank");

  const Signature sig = signature(gram);
  if (sig.positives != 1 || sig.negatives != r - 1 || sig.zeros != 0) {
    throw ModelValidationError("intersection form has signature (" + std::to_string(sig.positives) + "," +
                               std::to_string(sig.negatives) + "," + std::to_string(sig.zeros) +
                               "), expected (1," + std::to_string(r - 1) + ",0)");
  }
  if (ample.rank() != r) throw ModelValidationError("ample class has the wrong rank");
  if (gram.form(ample.coords(), ample.coords()).sign() <= 0) {
    throw ModelValidationError("ample class has non-positive self-intersection");
  }
  for (const auto& c : curves) {
    if (c.cls.rank() != r) throw ModelValidationError("curve " + c.name + " has the wrong rank");
    if (gram.form(c.cls.coords(), c.cls.coords()).sign() >= 0) {
      throw ModelValidationError("curve " + c.name + " is not a negative curve");
    }
    if (gram.form(ample.coords(), c.cls.coords()).sign() <= 0) {
      throw ModelValidationError("ample class is not positive on curve " + c.name);
    }
  }
  if (mode == ConeMode::Quadric) {
    if (!curves.empty()) throw ModelValidationError("quadric cone mode admits no negative curves");
    if (!mori.empty()) throw ModelValidationError("quadric cone mode takes no Mori generators");
  } else {
    if (mori.empty() && curves.empty()) {
      throw ModelValidationError("polyhedral cone mode needs Mori generators");
    }
    for (const auto& g : mori) {
      if (g.rank() != r) throw ModelValidationError("Mori generator has the wrong rank");
      if (gram.form(ample.coords(), g.coords()).sign() <= 0) {
        throw ModelValidationError("ample class is not positive on Mori generator " + g.to_string());
      }
    }
  }

  SurfaceModel m;
  m.labels_ = std::move(basis_labels);
  m.gram_ = std::move(gram);
  m.curves_ = std::move(curves);
  m.mode_ = mode;
  m.mori_ = std::move(mori);
  m.ample_ = std::move(ample);
  if (mode == ConeMode::Polyhedral && !cone_member(m.effective_generators(), m.ample_.coords())) {
    throw ModelValidationError("ample class is not in the declared effective cone");
  }
  return m;
}

Rational SurfaceModel::intersect(const DivisorClass& d, const DivisorClass& e) const {
  return gram_.form(d.coords(), e.coords());
}

SymMatrix SurfaceModel::curve_gram(const std::vector<std::size_t>& support) const {
  Matrix g(support.size(), support.size());
  for (std::size_t a = 0; a < support.size(); ++a)
    for (std::size_t b = 0; b < support.size(); ++b)
      g(a, b) = intersect(curves_[support[a]].cls, curves_[support[b]].cls);
  return SymMatrix(std::move(g));
}

std::vector<Vector> SurfaceModel::effective_generators() const {
  std::vector<Vector> gens;
  auto add = [&gens](const Vector& v) {
    for (const auto& g : gens)
      if (g == v) return;
    gens.push_back(v);
  };
  for (const auto& g : mori_) add(g.coords());
  for (const auto& c : curves_) add(c.cls.coords());
  return gens;
}

SurfaceModel blowup_plane(unsigned points) {
  if (points > 2) throw InvalidArgument("blowup_plane supports at most two points");
  const std::size_t r = points + 1;
  Matrix g(r, r);
  g(0, 0) = 1;
  for (std::size_t i = 1; i < r; ++i) g(i, i) = -1;
  std::vector<std::string> labels = {"H"};
  std::vector<NegativeCurve> curves;
  for (unsigned i = 1; i <= points; ++i) {
    labels.push_back(points == 1 ? "E" : "E" + std::to_string(i));
    Vector e(r, Rational(0));
    e[i] = 1;
    curves.push_back({labels.back(), DivisorClass(e)});
  }
  std::vector<DivisorClass> mori;
  Vector ample(r, Rational(-1));
  ample[0] = Rational(points + 1);
  if (points == 0) {
    mori.push_back(DivisorClass{1});
  } else if (points == 1) {
    mori = {DivisorClass{0, 1}, DivisorClass{1, -1}};
  } else {
    curves.push_back({"L", DivisorClass{1, -1, -1}});
    mori = {DivisorClass{0, 1, 0}, DivisorClass{0, 0, 1}, DivisorClass{1, -1, -1}};
  }
  return SurfaceModel::create(std::move(labels), SymMatrix(std::move(g)), std::move(curves),
                              ConeMode::Polyhedral, std::move(mori), DivisorClass(ample));
}

SurfaceModel elliptic_square() {
  return SurfaceModel::create({"e1", "e2", "delta"}, SymMatrix{{0, 1, 1}, {1, 0, 1}, {1, 1, 0}}, {},
                              ConeMode::Quadric, {}, DivisorClass{1, 1, 1});
}

}  // namespace asymcoh::surface
