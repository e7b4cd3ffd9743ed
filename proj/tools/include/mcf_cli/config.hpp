#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

namespace mcf::cli {

/// Exit codes shared by every command.
enum ExitCode : int { kExitOk = 0, kExitInvariantFailure = 1, kExitConfigError = 2, kExitPartialFailure = 3 };

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Command { Eval, Bounds, Compare, Bench, Apery, Selftest };
enum class Format { Table, Json, Csv };

struct RunConfig {
  Command command = Command::Eval;
  std::string r_spec = "1";
  bool log_spacing = false;
  std::vector<double> r_values;
  int k = 3;
  int l = 1;
  double tol = 1e-12;
  std::size_t max_terms = 20000;
  Format format = Format::Table;
  std::optional<std::string> output_path;
  std::vector<std::string> methods;
  int repeats = 5;
  int apery_terms = 60;
  bool force_fail = false;
};

std::string command_name(Command c);
std::string format_name(Format f);

/// "1", "0.5,1,2" or "start:stop:count"; the range form is linear unless
/// log_spacing is set. Throws ConfigError.
std::vector<double> parse_r_spec(const std::string& spec, bool log_spacing);

/// Methods each command understands; the first entries are the defaults.
std::vector<std::string> known_methods(Command c);
std::vector<std::string> default_methods(Command c);

/// Fills r_values and methods and checks every invariant. Throws ConfigError.
void validate(RunConfig& config);

nlohmann::json config_to_json(const RunConfig& config);

}  // namespace mcf::cli
