#pragma once

#include <ostream>
#include <string>

#include "mcf_cli/commands.hpp"

namespace mcf::cli {

/// Renders a result in the requested format (json is {config, rows, version}).
std::string render(const RunConfig& config, const CommandResult& result);

/// Full command-line entry point. Output goes to `out` unless --output is
/// given; diagnostics go to `err`. Returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace mcf::cli
