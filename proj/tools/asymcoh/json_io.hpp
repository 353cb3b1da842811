#pragma once

#include <asymcoh/abelian/abelian.hpp>
#include <asymcoh/flag/root_system.hpp>
#include <asymcoh/surface/surface_model.hpp>

#include <json.hpp>

#include <filesystem>
#include <string>
#include <variant>

namespace asymcoh::cli {

using Json = nlohmann::ordered_json;

/// Integers or "p/q" strings. Throws ParseError.
Rational rational_from_json(const Json& j, const std::string& where);
Vector vector_from_json(const Json& j, const std::string& where);
Matrix matrix_from_json(const Json& j, const std::string& where);

/// {"exact": "p/q", "decimal": "..."}
Json rational_json(const Rational& q);
/// {"exact": [...], "decimal": [...]}
Json vector_json(const Vector& v);
Json class_json(const DivisorClass& d);

struct SurfaceDocument {
  std::string name;
  surface::SurfaceModel model;
};

struct AbelianDocument {
  std::string name;
  abelian::AbelianModel model;
};

struct FlagDocument {
  std::string name;
  flag::RootSystem root_system;
};

using ModelDocument = std::variant<FlagDocument, SurfaceDocument, AbelianDocument>;

/// Reads and validates a model document. Schema violations raise ParseError,
/// mathematical validation failures raise ModelValidationError.
ModelDocument load_model_document(const std::filesystem::path& path);
ModelDocument parse_model_document(const Json& doc, const std::string& default_name);

/// Writes `text` to `path` through a temporary file in the same directory and a rename.
void write_atomically(const std::filesystem::path& path, const std::string& text);

}  // namespace asymcoh::cli
