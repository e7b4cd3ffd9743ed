#pragma once

#include <string>
#include <vector>

#include "mcf_cli/config.hpp"
#include "mcf_cli/table.hpp"

namespace mcf::cli {

struct CommandResult {
  Table table;
  int exit_code = kExitOk;
  std::vector<std::string> notes;  // shown under the table in table format
};

std::vector<Column> eval_schema();
std::vector<Column> compare_schema();
std::vector<Column> bounds_schema();
std::vector<Column> bench_schema();
std::vector<Column> apery_schema();
std::vector<Column> selftest_schema();
std::vector<Column> schema_for(Command c);

CommandResult run_eval(const RunConfig& config);
CommandResult run_compare(const RunConfig& config);
CommandResult run_bounds(const RunConfig& config);
CommandResult run_bench(const RunConfig& config);
CommandResult run_apery(const RunConfig& config);
CommandResult run_selftest(const RunConfig& config);

CommandResult run_command(const RunConfig& config);

/// Rows ordered by r (column "r"), then method (column "method").
void sort_rows(Table& table);

}  // namespace mcf::cli
