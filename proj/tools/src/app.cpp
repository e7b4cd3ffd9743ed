#include "mcf_cli/app.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include <CLI11.hpp>

#ifndef MCF_VERSION
#define MCF_VERSION "0.0.0"
#endif

namespace mcf::cli {

std::string render(const RunConfig& config, const CommandResult& result) {
  switch (config.format) {
    case Format::Csv: return to_csv(result.table);
    case Format::Json: {
      const nlohmann::json doc{
          {"config", config_to_json(config)}, {"rows", rows_to_json(result.table)}, {"version", MCF_VERSION}};
      return doc.dump(2) + "\n";
    }
    case Format::Table: {
      std::ostringstream os;
      print_table(os, result.table);
      for (const auto& note : result.notes) os << note << '\n';
      return os.str();
    }
  }
  return {};
}

namespace {

void add_common(CLI::App* sub, RunConfig& config, std::string& format, std::string& output) {
  sub->add_option("--r", config.r_spec, "radii: value, comma list, or start:stop:count")->capture_default_str();
  sub->add_flag("--log", config.log_spacing, "log spacing for start:stop:count");
  sub->add_option("--tol", config.tol, "target enclosure width")->capture_default_str();
  sub->add_option("--max-terms", config.max_terms, "continued fraction depth cap")->capture_default_str();
  sub->add_option("--format", format, "table, json or csv")->capture_default_str();
  sub->add_option("--output", output, "write to this file instead of stdout");
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig config;
  std::string format = "table";
  std::string output;

  CLI::App app{"Mathieu series evaluation and bounds via continued fractions", "mathieu-cf"};
  app.require_subcommand(1);
  app.set_version_flag("--version", MCF_VERSION);

  std::map<CLI::App*, Command> commands;
  auto sub = [&](const char* name, const char* help, Command c) {
    CLI::App* s = app.add_subcommand(name, help);
    add_common(s, config, format, output);
    commands[s] = c;
    return s;
  };

  auto* eval = sub("eval", "certified S(r) from the continued fraction tail", Command::Eval);
  auto* compare = sub("compare", "every evaluation method against the direct reference", Command::Compare);
  auto* bounds = sub("bounds", "classical and continued fraction bounds", Command::Bounds);
  auto* bench = sub("bench", "terms and time to reach --tol, per method", Command::Bench);
  auto* apery = sub("apery", "approximants of the zeta(3) continued fraction", Command::Apery);
  auto* selftest = sub("selftest", "run the invariant suite", Command::Selftest);

  for (auto* s : {eval, compare, bounds, bench}) {
    s->add_option("--methods", config.methods, "comma separated method list")->delimiter(',');
  }
  for (auto* s : {eval, compare, bench, bounds}) s->add_option("--k", config.k, "shift k >= 1")->capture_default_str();
  bounds->add_option("--l", config.l, "depth l >= 1")->capture_default_str();
  bench->add_option("--repeats", config.repeats, "timing repetitions (>= 5)")->capture_default_str();
  apery->add_option("--n", config.apery_terms, "number of approximants")->capture_default_str();
  selftest->add_flag("--force-fail", config.force_fail, "add a failing check");

  try {
    std::vector<std::string> args;
    for (int i = argc - 1; i > 0; --i) args.emplace_back(argv[i]);
    app.parse(args);
  } catch (const CLI::Success& e) {
    // --help and --version
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitConfigError;
  }

  try {
    for (const auto& [s, c] : commands)
      if (s->parsed()) config.command = c;
    static const std::map<std::string, Format> formats{
        {"table", Format::Table}, {"json", Format::Json}, {"csv", Format::Csv}};
    const auto f = formats.find(format);
    if (f == formats.end()) throw ConfigError("--format must be table, json or csv");
    config.format = f->second;
    if (!output.empty()) config.output_path = output;
    validate(config);
  } catch (const ConfigError& e) {
    err << "configuration error: " << e.what() << '\n';
    return kExitConfigError;
  }

  const CommandResult result = run_command(config);
  const std::string text = render(config, result);
  if (config.output_path) {
    std::ofstream file(*config.output_path, std::ios::binary | std::ios::trunc);
    if (!file || !(file << text)) {
      err << "cannot write " << *config.output_path << '\n';
      return kExitConfigError;
    }
  } else {
    out << text;
  }
  if (result.exit_code == kExitPartialFailure) err << "some rows could not be produced; see the status column\n";
  return result.exit_code;
}

}  // namespace mcf::cli
