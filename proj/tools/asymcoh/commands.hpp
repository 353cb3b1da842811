#pragma once

#include "asymcoh/json_io.hpp"

#include <asymcoh/core/variety.hpp>

#include <cstdint>
#include <exception>
#include <filesystem>
#include <memory>
#include <optional>
#include <string>

namespace asymcoh::cli {

enum ExitCode : int {
  kOk = 0,
  kSuiteFailure = 1,
  kParseError = 2,
  kUnsupportedType = 3,
  kValidationError = 4,
  kNotBig = 5,
  kInternalError = 70,
};

/// Maps library exceptions to the documented exit codes.
int exit_code_for(const std::exception& e);

struct FlagOptions {
  std::string type;
  std::optional<Vector> cls;
  bool chambers = false;
  std::optional<unsigned> oracle;
};

struct SurfaceOptions {
  std::filesystem::path data;
  std::optional<Vector> cls;
  bool chambers = false;
  bool zariski_chamber = false;
};

struct AbelianOptions {
  std::optional<Vector> exe;
  std::optional<std::filesystem::path> data;
  std::optional<Vector> cls;
};

struct CheckOptions {
  std::optional<std::string> type;
  std::optional<std::filesystem::path> data;
  bool exe = false;
  std::string suite = "all";
  std::uint64_t seed = 0;
  std::size_t samples = 200;
};

struct CheckResult {
  Json report;
  bool passed = false;
  std::optional<std::string> witness;
};

Json cmd_flag(const FlagOptions& opt);
Json cmd_surface(const SurfaceOptions& opt);
Json cmd_abelian(const AbelianOptions& opt);
CheckResult cmd_check(const CheckOptions& opt);

/// Builds the VarietyModel named by a check target.
std::unique_ptr<VarietyModel> resolve_target(const CheckOptions& opt);

}  // namespace asymcoh::cli
