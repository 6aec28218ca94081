#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace binomoment::cli {

enum ExitCode : int {
  kOk = 0,
  kDomainError = 1,
  kVerificationFailed = 2,
  kInconclusive = 3,
  kUsage = 64,
};

/// The figure configuration bundled with the tool.
const nlohmann::json& default_figure_config();

/// Writes the data behind figure `id` (1..6) as CSV.
void emit_figure_data(int id, std::ostream& out, const nlohmann::json& config = default_figure_config());

/// Runs one command line (args excludes the program name). Normal output goes
/// to out, diagnostics and usage text to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace binomoment::cli
