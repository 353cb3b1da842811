#include "asymcoh/commands.hpp"

#include <asymcoh/error.hpp>

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>

using namespace asymcoh;
using namespace asymcoh::cli;

namespace {

std::optional<Vector> optional_list(const std::string& text) {
  if (text.empty()) return std::nullopt;
  return parse_rational_list(text);
}

std::uint64_t parse_seed(const std::string& text, const char* source) {
  std::size_t used = 0;
  unsigned long long value = 0;
  try {
    value = std::stoull(text, &used, 10);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size() || text.front() == '-') {
    throw ParseError(std::string(source) + " must be a non-negative integer, got '" + text + "'");
  }
  return value;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Asymptotic cohomology of divisor classes on flag varieties, surfaces and abelian varieties"};
  app.require_subcommand(1);
  std::string output;
  app.add_option("-o,--output", output, "Write the report to this file instead of stdout");

  FlagOptions flag_opt;
  std::string flag_class;
  unsigned oracle = 0;
  auto* flag_cmd = app.add_subcommand("flag", "Evaluate a class on a complete flag variety G/B");
  flag_cmd->add_option("--type", flag_opt.type, "Root system type, e.g. A2, B3, G2")->required();
  flag_cmd->add_option("--class", flag_class, "Class in the fundamental-weight basis, e.g. 1,-1/2");
  flag_cmd->add_flag("--chambers", flag_opt.chambers, "List all chambers of the root arrangement");
  auto* oracle_opt = flag_cmd->add_option("--oracle", oracle, "Compare with Borel-Weil-Bott up to m = M");

  SurfaceOptions surface_opt;
  std::string surface_data;
  std::string surface_class;
  auto* surface_cmd = app.add_subcommand("surface", "Evaluate a class on a surface model");
  surface_cmd->add_option("--data", surface_data, "Surface model document (JSON)")->required();
  surface_cmd->add_option("--class", surface_class, "Class in the model basis, e.g. 3,1");
  surface_cmd->add_flag("--chambers", surface_opt.chambers, "Enumerate Zariski chambers (polyhedral mode)");
  surface_cmd->add_flag("--zariski-chamber", surface_opt.zariski_chamber,
                        "Require the class to be big and report its Zariski chamber");

  std::string abelian_exe;
  std::string abelian_data;
  std::string abelian_class;
  auto* abelian_cmd = app.add_subcommand("abelian", "Evaluate a class on an abelian variety");
  auto* exe_opt = abelian_cmd->add_option("--exe", abelian_exe, "E x E preset class x,y,z in (e1, e2, delta)");
  auto* data_opt = abelian_cmd->add_option("--data", abelian_data, "Abelian model document (JSON)");
  abelian_cmd->add_option("--class", abelian_class, "Class in the basis of the model's Hermitian forms");
  exe_opt->excludes(data_opt);

  CheckOptions check_opt;
  std::string check_type;
  std::string check_data;
  std::string seed_text = "0";
  auto* check_cmd = app.add_subcommand("check", "Run property suites on a model");
  check_cmd->add_option("--type", check_type, "Flag variety root system type");
  check_cmd->add_option("--data", check_data, "Surface, abelian or flag model document");
  check_cmd->add_flag("--exe", check_opt.exe, "The E x E abelian surface preset");
  check_cmd->add_option("--suite", check_opt.suite,
                        "homogeneity|walls|lipschitz|euler|telescoping|normgrowth|all")
      ->capture_default_str();
  check_cmd->add_option("--seed", seed_text, "Sampling seed (ASYMCOH_SEED overrides)")->capture_default_str();
  check_cmd->add_option("--samples", check_opt.samples, "Sample size per suite")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kParseError;
  }

  try {
    Json report;
    int code = kOk;
    if (*flag_cmd) {
      flag_opt.cls = optional_list(flag_class);
      if (*oracle_opt) flag_opt.oracle = oracle;
      report = cmd_flag(flag_opt);
    } else if (*surface_cmd) {
      surface_opt.data = surface_data;
      surface_opt.cls = optional_list(surface_class);
      report = cmd_surface(surface_opt);
    } else if (*abelian_cmd) {
      AbelianOptions opt;
      if (*exe_opt) opt.exe = parse_rational_list(abelian_exe);
      if (*data_opt) opt.data = abelian_data;
      opt.cls = optional_list(abelian_class);
      report = cmd_abelian(opt);
    } else if (*check_cmd) {
      if (!check_type.empty()) check_opt.type = check_type;
      if (!check_data.empty()) check_opt.data = check_data;
      check_opt.seed = parse_seed(seed_text, "--seed");
      if (const char* env = std::getenv("ASYMCOH_SEED"); env && *env) check_opt.seed = parse_seed(env, "ASYMCOH_SEED");
      CheckResult result = cmd_check(check_opt);
      report = std::move(result.report);
      if (!result.passed) {
        std::cerr << "check failed: " << result.witness.value_or("") << "\n";
        code = kSuiteFailure;
      }
    }
    const std::string text = report.dump(2) + "\n";
    if (output.empty()) {
      std::cout << text;
    } else {
      write_atomically(output, text);
    }
    return code;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e);
  }
}
