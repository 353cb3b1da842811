#include "asymcoh/json_io.hpp"

#include <asymcoh/error.hpp>

#include <fstream>
#include <set>
#include <sstream>
#include <sys/stat.h>
#include <unistd.h>

namespace asymcoh::cli {

namespace {

const Json& require(const Json& obj, const char* key, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end()) throw ParseError(where + ": missing field '" + key + "'");
  return *it;
}

void reject_unknown_keys(const Json& obj, const std::set<std::string>& allowed, const std::string& where) {
  for (const auto& [key, value] : obj.items()) {
    if (!allowed.count(key)) throw ParseError(where + ": unknown field '" + key + "'");
  }
}

std::size_t size_from_json(const Json& j, const std::string& where) {
  if (!j.is_number_integer() || j.get<long long>() < 1) {
    throw ParseError(where + " must be a positive integer");
  }
  return static_cast<std::size_t>(j.get<long long>());
}

std::string string_from_json(const Json& j, const std::string& where) {
  if (!j.is_string()) throw ParseError(where + " must be a string");
  return j.get<std::string>();
}

Matrix sized_matrix(const Json& j, std::size_t rows, std::size_t cols, const std::string& where) {
  Matrix m = matrix_from_json(j, where);
  if (m.rows() != rows || m.cols() != cols) {
    throw ParseError(where + " must be " + std::to_string(rows) + "x" + std::to_string(cols));
  }
  return m;
}

Vector sized_vector(const Json& j, std::size_t n, const std::string& where) {
  Vector v = vector_from_json(j, where);
  if (v.size() != n) throw ParseError(where + " must have " + std::to_string(n) + " entries");
  return v;
}

SurfaceDocument parse_surface(const Json& doc, const std::string& name) {
  reject_unknown_keys(doc, {"kind", "name", "rank", "basis", "gram", "curves", "cone", "ample"}, "surface");
  const std::size_t r = size_from_json(require(doc, "rank", "surface"), "surface.rank");
  std::vector<std::string> labels;
  if (auto it = doc.find("basis"); it != doc.end()) {
    if (!it->is_array() || it->size() != r) throw ParseError("surface.basis must list " + std::to_string(r) + " labels");
    for (const auto& l : *it) labels.push_back(string_from_json(l, "surface.basis entry"));
  } else {
    for (std::size_t i = 1; i <= r; ++i) labels.push_back("b" + std::to_string(i));
  }
  const Matrix gram = sized_matrix(require(doc, "gram", "surface"), r, r, "surface.gram");
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j)
      if (gram(i, j) != gram(j, i)) throw ModelValidationError("surface.gram is not symmetric");

  std::vector<surface::NegativeCurve> curves;
  const Json& jc = require(doc, "curves", "surface");
  if (!jc.is_array()) throw ParseError("surface.curves must be an array");
  for (std::size_t i = 0; i < jc.size(); ++i) {
    const std::string where = "surface.curves[" + std::to_string(i) + "]";
    if (!jc[i].is_object()) throw ParseError(where + " must be an object");
    reject_unknown_keys(jc[i], {"name", "coords"}, where);
    curves.push_back({string_from_json(require(jc[i], "name", where), where + ".name"),
                      DivisorClass(sized_vector(require(jc[i], "coords", where), r, where + ".coords"))});
  }

  const Json& cone = require(doc, "cone", "surface");
  if (!cone.is_object()) throw ParseError("surface.cone must be an object");
  const std::string mode = string_from_json(require(cone, "mode", "surface.cone"), "surface.cone.mode");
  std::vector<DivisorClass> mori;
  surface::ConeMode cone_mode;
  if (mode == "polyhedral") {
    reject_unknown_keys(cone, {"mode", "mori"}, "surface.cone");
    cone_mode = surface::ConeMode::Polyhedral;
    const Json& jm = require(cone, "mori", "surface.cone");
    if (!jm.is_array()) throw ParseError("surface.cone.mori must be an array");
    for (std::size_t i = 0; i < jm.size(); ++i) {
      mori.emplace_back(sized_vector(jm[i], r, "surface.cone.mori[" + std::to_string(i) + "]"));
    }
  } else if (mode == "quadric") {
    reject_unknown_keys(cone, {"mode"}, "surface.cone");
    cone_mode = surface::ConeMode::Quadric;
  } else {
    throw ParseError("surface.cone.mode must be \"polyhedral\" or \"quadric\"");
  }
  const DivisorClass ample(sized_vector(require(doc, "ample", "surface"), r, "surface.ample"));
  return {name, surface::SurfaceModel::create(std::move(labels), SymMatrix(gram), std::move(curves), cone_mode,
                                              std::move(mori), ample)};
}

AbelianDocument parse_abelian(const Json& doc, const std::string& name) {
  reject_unknown_keys(doc, {"kind", "name", "g", "basis_forms", "lattice"}, "abelian");
  const std::size_t g = size_from_json(require(doc, "g", "abelian"), "abelian.g");
  const Json& jf = require(doc, "basis_forms", "abelian");
  if (!jf.is_array() || jf.empty()) throw ParseError("abelian.basis_forms must be a non-empty array");
  std::vector<abelian::ComplexMatrix> forms;
  for (std::size_t k = 0; k < jf.size(); ++k) {
    const std::string where = "abelian.basis_forms[" + std::to_string(k) + "]";
    if (!jf[k].is_object()) throw ParseError(where + " must be an object");
    reject_unknown_keys(jf[k], {"re", "im"}, where);
    forms.push_back({sized_matrix(require(jf[k], "re", where), g, g, where + ".re"),
                     sized_matrix(require(jf[k], "im", where), g, g, where + ".im")});
  }
  const Json& jl = require(doc, "lattice", "abelian");
  if (!jl.is_array() || jl.size() != 2 * g) {
    throw ParseError("abelian.lattice must list " + std::to_string(2 * g) + " generators");
  }
  std::vector<Vector> lattice;
  for (std::size_t i = 0; i < jl.size(); ++i) {
    lattice.push_back(sized_vector(jl[i], 2 * g, "abelian.lattice[" + std::to_string(i) + "]"));
  }
  return {name, abelian::AbelianModel::create(static_cast<unsigned>(g), std::move(forms), std::move(lattice))};
}

}  // namespace

Rational rational_from_json(const Json& j, const std::string& where) {
  if (j.is_number_integer()) {
    return j.is_number_unsigned() ? Rational(j.get<unsigned long long>()) : Rational(j.get<long long>());
  }
  if (j.is_string()) {
    try {
      return parse_rational(j.get<std::string>());
    } catch (const ParseError& e) {
      throw ParseError(where + ": " + e.what());
    }
  }
  throw ParseError(where + " must be an integer or a \"p/q\" string");
}

Vector vector_from_json(const Json& j, const std::string& where) {
  if (!j.is_array()) throw ParseError(where + " must be an array");
  Vector v;
  for (std::size_t i = 0; i < j.size(); ++i) {
    v.push_back(rational_from_json(j[i], where + "[" + std::to_string(i) + "]"));
  }
  return v;
}

Matrix matrix_from_json(const Json& j, const std::string& where) {
  if (!j.is_array() || j.empty()) throw ParseError(where + " must be a non-empty array of rows");
  std::vector<Vector> rows;
  for (std::size_t i = 0; i < j.size(); ++i) {
    rows.push_back(vector_from_json(j[i], where + "[" + std::to_string(i) + "]"));
    if (rows.back().size() != rows.front().size()) throw ParseError(where + " has rows of different lengths");
  }
  return Matrix::from_rows(rows);
}

Json rational_json(const Rational& q) { return Json{{"exact", to_string(q)}, {"decimal", to_decimal(q)}}; }

Json vector_json(const Vector& v) {
  Json exact = Json::array();
  Json decimal = Json::array();
  for (const auto& q : v) {
    exact.push_back(to_string(q));
    decimal.push_back(to_decimal(q));
  }
  return Json{{"exact", exact}, {"decimal", decimal}};
}

Json class_json(const DivisorClass& d) { return vector_json(d.coords()); }

ModelDocument parse_model_document(const Json& doc, const std::string& default_name) {
  if (!doc.is_object()) throw ParseError("model document must be a JSON object");
  const std::string kind = string_from_json(require(doc, "kind", "document"), "document.kind");
  std::string name = default_name;
  if (auto it = doc.find("name"); it != doc.end()) name = string_from_json(*it, "document.name");
  if (kind == "surface") return parse_surface(doc, name);
  if (kind == "abelian") return parse_abelian(doc, name);
  if (kind == "flag") {
    reject_unknown_keys(doc, {"kind", "name", "type"}, "flag");
    const std::string type = string_from_json(require(doc, "type", "flag"), "flag.type");
    return FlagDocument{name, flag::RootSystem::parse(type)};
  }
  throw ParseError("document.kind must be \"flag\", \"surface\" or \"abelian\"");
}

ModelDocument load_model_document(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open model document '" + path.string() + "'");
  Json doc;
  try {
    doc = Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw ParseError("'" + path.string() + "' is not valid JSON: " + e.what());
  }
  return parse_model_document(doc, path.stem().string());
}

void write_atomically(const std::filesystem::path& path, const std::string& text) {
  const std::filesystem::path dir = path.has_parent_path() ? path.parent_path() : std::filesystem::path(".");
  std::string pattern = (dir / ("." + path.filename().string() + ".XXXXXX")).string();
  const int fd = ::mkstemp(pattern.data());
  if (fd < 0) throw Error("cannot create a temporary file next to '" + path.string() + "'");
  ::fchmod(fd, 0644);
  std::size_t written = 0;
  while (written < text.size()) {
    const auto n = ::write(fd, text.data() + written, text.size() - written);
    if (n <= 0) {
      ::close(fd);
      std::filesystem::remove(pattern);
      throw Error("cannot write '" + path.string() + "'");
    }
    written += static_cast<std::size_t>(n);
  }
  ::fsync(fd);
  ::close(fd);
  std::filesystem::rename(pattern, path);
}

}  // namespace asymcoh::cli
