#ifndef HYPERU_TOOLS_COMMANDS_HPP
#define HYPERU_TOOLS_COMMANDS_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "hyperu/json_io.hpp"

namespace hyperu::cli {

enum ExitCode : int { kOk = 0, kInputError = 2, kResidualExceeded = 3 };

/// Result of one command invocation. Commands never print; main or the batch
/// runner decides what goes to stdout and stderr.
struct CommandOutput {
  int exit_code = kOk;
  Json document;
  std::vector<std::string> diagnostics;
};

struct CommonOptions {
  double tol = 1e-9;
  bool degrees = false;
};

struct UnitaryOptions : CommonOptions {
  bool general = false;
  std::optional<double> gamma;
};

struct BasisOptions : CommonOptions {
  std::optional<Json> free;
  std::optional<std::uint64_t> seed;
};

/// Residual agreement required by generate --check.
inline constexpr double kCheckTolerance = 1e-14;
/// Norm deviation accepted silently before an ingest warning.
inline constexpr double kIngestNormTolerance = 1e-9;

CommandOutput run_generate(const Json& params, const UnitaryOptions& opts);

/// Recomputes the residuals of a prior generate output from its serialized
/// matrix. If fresh is given, its residuals are compared too.
CommandOutput run_check(const Json& prior, const Json* fresh_params, const UnitaryOptions& opts);

CommandOutput run_invert(const Json& state, const CommonOptions& opts);
CommandOutput run_basis(const Json& state, const BasisOptions& opts);
CommandOutput run_mpi(const Json& params, const Json& input, const UnitaryOptions& opts);
CommandOutput run_ep(const Json& spec, const CommonOptions& opts);

/// Runs fn on every *.json file in dir (sorted by name) using a small worker
/// pool. The combined document lists per-file results in name order; the exit
/// code is the largest per-file code.
CommandOutput run_batch(const std::string& dir,
                        const std::function<CommandOutput(const Json&)>& fn);

}  // namespace hyperu::cli

#endif  // HYPERU_TOOLS_COMMANDS_HPP
