#pragma once

#include <asymcoh/core/variety.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace asymcoh {

enum class Suite { Homogeneity, Walls, Lipschitz, Euler, Telescoping, NormGrowth };

std::string_view suite_name(Suite s);
/// Accepts the names above in lower case ("normgrowth" for NormGrowth).
std::optional<Suite> parse_suite(std::string_view name);
std::vector<Suite> all_suites();

struct SuiteOptions {
  std::uint64_t seed = 0;
  std::size_t samples = 200;
};

struct SuiteMetric {
  std::string name;
  Rational value;
};

struct SuiteOutcome {
  std::string suite;
  bool passed = false;
  std::size_t checks = 0;
  std::vector<SuiteMetric> metrics;
  std::optional<std::string> witness;  // minimal failing input
};

SuiteOutcome run_suite(const VarietyModel& model, Suite suite, const SuiteOptions& options);

}  // namespace asymcoh
