#pragma once

#include "cli/report.hpp"

#include <cospec/decomposition.hpp>
#include <cospec/errors.hpp>
#include <cospec/export.hpp>
#include <cospec/rational.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace cospec::cli {

enum ExitCode : int { kPass = 0, kCheckFailed = 1, kUsageError = 2, kBudgetExceeded = 3 };

enum class Method { Exact, Transfer, Oracle, All };

Method parse_method(const std::string& name);

struct RunConfig {
  std::string word;
  std::vector<Rational> k_values{Rational(1)};
  std::size_t tau_max = 3;
  std::size_t tau_cap = 10;
  Method method = Method::All;
  ExportFormat format = ExportFormat::Json;
  std::optional<std::string> out;
  std::uint64_t budget = 10'000'000;
  std::size_t oracle_max_vertices = 30;
  double tol = 1e-9;
  Rational scale{1};
  std::vector<Rational> t_values;
  std::size_t workers = 0;  // 0: hardware concurrency
};

// Scans default to these k values.
std::vector<Rational> default_scan_k();

struct CommandResult {
  Json report;
  int exit_code = kPass;
  std::string summary;  // one human-readable line per check, for stderr
  std::string text;     // raw payload for export (instead of JSON)
};

// Each command validates its own inputs; library errors propagate as
// cospec::Error and are mapped to exit codes by exit_code_for().
CommandResult cmd_verify(const RunConfig& cfg);
CommandResult cmd_scan(const RunConfig& cfg);
CommandResult cmd_blowup(const RunConfig& cfg);
CommandResult cmd_identities(const RunConfig& cfg);
CommandResult cmd_export(const RunConfig& cfg);
CommandResult cmd_spectrum(const RunConfig& cfg);
CommandResult cmd_charpoly(const RunConfig& cfg);

int exit_code_for(const Error& err);
Json error_report(const Error& err);

// Per-word transfer report:
// {"word","k","charpoly_exact","long_part","short_part",
//  "transfer_equals_exact","toggle_equals","u_conjugation"}
Json transfer_report(const Word& w, const Rational& k);

}  // namespace cospec::cli
