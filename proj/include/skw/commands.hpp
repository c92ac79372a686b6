#pragma once

#include <cstdint>
#include <optional>
#include <string>

namespace skw {

inline constexpr const char* kToolVersion = "1.0.0";

/// Exit codes shared by all subcommands.
enum ExitCode : int { kPass = 0, kCheckFailure = 1, kUsageError = 2, kSamplingFailure = 3, kDataError = 4 };

struct RunConfig {
  std::string entry = "cubic";
  int points = 8;
  std::uint64_t seed = 1;
  std::optional<double> tol;   ///< per-command default when unset
  std::optional<double> step;  ///< per-command default when unset
};

struct CommandResult {
  int exit_code;
  std::string json;
};

CommandResult cmd_catalog();
/// Equation, special-condition, geometry and VHS checks at seeded points.
CommandResult cmd_verify(const RunConfig& config);
/// sub: "split" or "purity"; text is the filtration-pair JSON.
CommandResult cmd_rees(const std::string& sub, const std::string& text, std::optional<int> weight);
/// sub: "check", "nijenhuis" or "correspondence".
CommandResult cmd_hk(const std::string& sub, const RunConfig& config);
/// sub: "normal-bundle".
CommandResult cmd_twistor(const std::string& sub, const RunConfig& config);

}  // namespace skw
