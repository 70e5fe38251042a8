#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <json.hpp>

#include "vcmkit/exact_matrix.hpp"
#include "vcmkit/vres.hpp"

namespace vcmkit::cli {

/// Process exit codes.
enum ExitCode : int {
  kVerdictTrue = 0,
  kVerdictFalse = 1,
  kExhausted = 2,
  kInputError = 3,
};

struct CommandOptions {
  CoefficientField field = CoefficientField::prime(2);
  std::uint64_t budget = kDefaultSearchBudget;
  /// Report wall-clock time; off by default so reports are reproducible byte for byte.
  bool timing = false;
  /// Previously emitted report whose certificate should be re-validated.
  std::optional<std::string> recheck_report;
};

struct CommandResult {
  nlohmann::json report;
  int exit_code = kVerdictTrue;
};

/// Each command takes raw document bytes so the digest covers exactly what was read.
CommandResult cmd_info(const std::string& document);
CommandResult cmd_check_cm(const std::string& document, const CommandOptions& options);
CommandResult cmd_certify_balanced(const std::string& document, const CommandOptions& options);
CommandResult cmd_search(const std::string& document, const CommandOptions& options);
CommandResult cmd_verify_complex(const std::string& matrix_document);
/// Writes <out_dir>/<name>.json and <out_dir>/<name>.matrices.json.
CommandResult cmd_fixtures(const std::string& name, const std::string& out_dir);

}  // namespace vcmkit::cli
