#include "mcf_cli/config.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "mcf_cli/table.hpp"

namespace mcf::cli {

std::string command_name(Command c) {
  switch (c) {
    case Command::Eval: return "eval";
    case Command::Bounds: return "bounds";
    case Command::Compare: return "compare";
    case Command::Bench: return "bench";
    case Command::Apery: return "apery";
    case Command::Selftest: return "selftest";
  }
  return "?";
}

std::string format_name(Format f) {
  switch (f) {
    case Format::Table: return "table";
    case Format::Json: return "json";
    case Format::Csv: return "csv";
  }
  return "?";
}

namespace {

double parse_number(const std::string& text, const std::string& what) {
  try {
    return parse_real(text);
  } catch (const std::invalid_argument&) {
    throw ConfigError("bad " + what + " '" + text + "' in --r");
  }
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(s);
  while (std::getline(in, item, sep)) out.push_back(item);
  if (!s.empty() && s.back() == sep) out.emplace_back();
  return out;
}

}  // namespace

std::vector<double> parse_r_spec(const std::string& spec, bool log_spacing) {
  if (spec.empty()) throw ConfigError("--r must not be empty");
  std::vector<double> out;
  if (spec.find(':') != std::string::npos) {
    const auto parts = split(spec, ':');
    if (parts.size() != 3) throw ConfigError("range must be start:stop:count, got '" + spec + "'");
    const double start = parse_number(parts[0], "range start");
    const double stop = parse_number(parts[1], "range stop");
    const double count_real = parse_number(parts[2], "range count");
    if (!(count_real >= 1.0) || count_real != std::floor(count_real) || count_real > 1e6)
      throw ConfigError("range count must be a positive integer, got '" + parts[2] + "'");
    const auto count = static_cast<std::size_t>(count_real);
    if (log_spacing && !(start > 0.0 && stop > 0.0)) throw ConfigError("--log needs a positive range");
    for (std::size_t i = 0; i < count; ++i) {
      const double t = count == 1 ? 0.0 : static_cast<double>(i) / static_cast<double>(count - 1);
      double v = log_spacing ? std::exp(std::log(start) + t * (std::log(stop) - std::log(start)))
                             : start + t * (stop - start);
      if (i + 1 == count && count > 1) v = stop;
      if (i == 0) v = start;
      out.push_back(v);
    }
  } else {
    if (log_spacing) throw ConfigError("--log applies only to start:stop:count ranges");
    for (const auto& item : split(spec, ',')) out.push_back(parse_number(item, "radius"));
  }
  for (double r : out)
    if (!std::isfinite(r) || r < 0.0) throw ConfigError("radii must be finite and >= 0");
  return out;
}

std::vector<std::string> known_methods(Command c) {
  switch (c) {
    case Command::Eval:
    case Command::Compare:
      return {"cf", "direct", "truncated", "integral", "trigamma", "asymptotic"};
    case Command::Bounds:
      return {"makai", "alzer", "milovanovic_pogany", "cf_convergent", "closed_form(2)", "closed_form(3)"};
    case Command::Bench:
      return {"direct_truncated", "direct_enclosure", "cf_k1", "cf_k2", "cf_k3", "cf_k5"};
    case Command::Apery:
    case Command::Selftest:
      return {};
  }
  return {};
}

std::vector<std::string> default_methods(Command c) {
  if (c == Command::Eval) return {"cf"};
  return known_methods(c);
}

void validate(RunConfig& config) {
  if (!(config.tol > 0.0) || !std::isfinite(config.tol)) throw ConfigError("--tol must be positive and finite");
  if (config.k < 1) throw ConfigError("--k must be >= 1");
  if (config.l < 1) throw ConfigError("--l must be >= 1");
  if (config.max_terms < 2) throw ConfigError("--max-terms must be >= 2");
  if (config.repeats < 5) throw ConfigError("--repeats must be >= 5");
  if (config.apery_terms < 1 || config.apery_terms > 10000) throw ConfigError("--n must be in [1, 10000]");
  config.r_values = parse_r_spec(config.r_spec, config.log_spacing);
  std::sort(config.r_values.begin(), config.r_values.end());

  const auto known = known_methods(config.command);
  if (config.methods.empty()) {
    config.methods = default_methods(config.command);
  } else {
    if (known.empty()) throw ConfigError("--methods is not used by " + command_name(config.command));
    for (const auto& m : config.methods)
      if (std::find(known.begin(), known.end(), m) == known.end())
        throw ConfigError("unknown method '" + m + "' for " + command_name(config.command));
  }
  if (config.output_path && config.output_path->empty()) throw ConfigError("--output must not be empty");
}

nlohmann::json config_to_json(const RunConfig& config) {
  return {{"command", command_name(config.command)},
          {"r", config.r_values},
          {"r_spec", config.r_spec},
          {"log", config.log_spacing},
          {"k", config.k},
          {"l", config.l},
          {"tol", config.tol},
          {"max_terms", config.max_terms},
          {"methods", config.methods},
          {"repeats", config.repeats},
          {"format", format_name(config.format)}};
}

}  // namespace mcf::cli
