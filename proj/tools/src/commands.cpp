#include "mcf_cli/commands.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <optional>

#include "mcf/bounds.hpp"
#include "mcf/errors.hpp"
#include "mcf/mathieu.hpp"
#include "mcf/oracle.hpp"

namespace mcf::cli {

namespace {

using Clock = std::chrono::steady_clock;

constexpr double kReferenceTol = 1e-13;

std::int64_t elapsed_ns(Clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() - start).count();
}

Cell opt(const std::optional<double>& v) {
  if (v) return *v;
  return std::monostate{};
}

std::optional<double> reference_value(double r) {
  try {
    return mathieu_direct(r, kReferenceTol).midpoint();
  } catch (const Error&) {
    return std::nullopt;
  }
}

// status values: ok, estimate (uncertified value), target_not_met, error: ...
bool is_failure(const std::string& status) { return status != "ok" && status != "estimate"; }

struct Evaluation {
  std::string method;
  std::optional<double> value;
  std::optional<double> lower;
  std::optional<double> upper;
  std::optional<std::int64_t> terms;
  std::optional<bool> target_met;
  std::string status = "ok";
  std::int64_t time_ns = 0;
};

Evaluation from_enclosure(std::string method, const Enclosure& e, std::size_t terms, bool met) {
  Evaluation out;
  out.method = std::move(method);
  out.value = e.midpoint();
  out.lower = e.lower;
  out.upper = e.upper;
  out.terms = static_cast<std::int64_t>(terms);
  out.target_met = met;
  out.status = met ? "ok" : "target_not_met";
  return out;
}

Evaluation evaluate_method(const std::string& method, double r, const RunConfig& config) {
  const auto start = Clock::now();
  Evaluation out;
  try {
    if (method == "cf") {
      const CertifiedValue v = tail_identity_to_width(r, config.k, config.tol, config.max_terms);
      out = from_enclosure("cf", v.enclosure, v.terms_used, v.target_met);
    } else if (method == "direct") {
      const std::size_t m = direct_terms_required(r, config.tol);
      out = from_enclosure("direct", mathieu_direct_fixed(r, m), m, true);
    } else if (method == "truncated") {
      const std::size_t m = truncated_terms_required(r, config.tol);
      out = from_enclosure("truncated", mathieu_truncated(r, config.tol), m, true);
    } else if (method == "integral") {
      const double tol = std::max(config.tol, kMinIntegralTolerance);
      out.value = mathieu_integral(r, tol);
      out.status = "estimate";
    } else if (method == "trigamma") {
      out.value = tail_via_trigamma(r, 1.0);
      out.status = "estimate";
    } else if (method == "asymptotic") {
      const AsymptoticResult a = asymptotic_auto(r);
      out.value = a.value;
      out.terms = static_cast<std::int64_t>(a.terms_used);
      out.status = "estimate";
    }
  } catch (const std::exception& e) {
    out = {};
    out.status = std::string("error: ") + e.what();
  }
  out.method = method;
  out.time_ns = elapsed_ns(start);
  return out;
}

std::vector<Evaluation> evaluate_all(double r, const RunConfig& config) {
  std::vector<Evaluation> rows;
  for (const auto& m : config.methods) rows.push_back(evaluate_method(m, r, config));
  const bool has_direct = std::find(config.methods.begin(), config.methods.end(), "direct") != config.methods.end();
  // the CF path needs r > 0; fall back to direct summation there
  if (!(r > 0.0) && !has_direct) rows.push_back(evaluate_method("direct", r, config));
  return rows;
}

Row eval_row(double r, const Evaluation& e) {
  Cell width = std::monostate{};
  if (e.lower && e.upper) width = *e.upper - *e.lower;
  Cell terms = std::monostate{};
  if (e.terms) terms = *e.terms;
  Cell met = std::monostate{};
  if (e.target_met) met = *e.target_met;
  return {r, e.method, opt(e.value), opt(e.lower), opt(e.upper), width, terms, met, e.status, e.time_ns};
}

std::size_t column(const Table& t, const char* name) { return t.column_index(name); }

double median(std::vector<std::int64_t> samples) {
  std::sort(samples.begin(), samples.end());
  const std::size_t n = samples.size();
  if (n % 2 == 1) return static_cast<double>(samples[n / 2]);
  return 0.5 * static_cast<double>(samples[n / 2 - 1] + samples[n / 2]);
}

volatile double g_sink = 0.0;

}  // namespace

std::vector<Column> eval_schema() {
  return {{"r", ColumnType::Real},          {"method", ColumnType::Text},  {"value", ColumnType::Real},
          {"lower", ColumnType::Real},      {"upper", ColumnType::Real},   {"width", ColumnType::Real},
          {"terms_used", ColumnType::Integer}, {"target_met", ColumnType::Flag}, {"status", ColumnType::Text},
          {"time_ns", ColumnType::Integer}};
}

std::vector<Column> compare_schema() {
  auto cols = eval_schema();
  cols.insert(cols.end() - 2, {{"reference", ColumnType::Real}, {"deviation", ColumnType::Real}});
  return cols;
}

std::vector<Column> bounds_schema() {
  return {{"r", ColumnType::Real},           {"method", ColumnType::Text},         {"lower", ColumnType::Real},
          {"upper", ColumnType::Real},       {"reference", ColumnType::Real},      {"lower_gap", ColumnType::Real},
          {"upper_gap", ColumnType::Real},   {"tightest_lower", ColumnType::Flag}, {"tightest_upper", ColumnType::Flag},
          {"status", ColumnType::Text}};
}

std::vector<Column> bench_schema() {
  return {{"r", ColumnType::Real},          {"method", ColumnType::Text},      {"tol", ColumnType::Real},
          {"terms", ColumnType::Integer},   {"target_met", ColumnType::Flag},  {"median_ns", ColumnType::Real},
          {"repeats", ColumnType::Integer}, {"reduction", ColumnType::Real},   {"status", ColumnType::Text}};
}

std::vector<Column> apery_schema() {
  return {{"n", ColumnType::Integer}, {"approximant", ColumnType::Real}, {"error", ColumnType::Real}};
}

std::vector<Column> selftest_schema() {
  return {{"module", ColumnType::Text}, {"invariant", ColumnType::Text}, {"passed", ColumnType::Flag},
          {"detail", ColumnType::Text}};
}

std::vector<Column> schema_for(Command c) {
  switch (c) {
    case Command::Eval: return eval_schema();
    case Command::Compare: return compare_schema();
    case Command::Bounds: return bounds_schema();
    case Command::Bench: return bench_schema();
    case Command::Apery: return apery_schema();
    case Command::Selftest: return selftest_schema();
  }
  return {};
}

void sort_rows(Table& table) {
  const std::size_t r = column(table, "r");
  const std::size_t m = column(table, "method");
  std::stable_sort(table.rows.begin(), table.rows.end(), [&](const Row& a, const Row& b) {
    const double ra = std::get<double>(a[r]);
    const double rb = std::get<double>(b[r]);
    if (ra != rb) return ra < rb;
    return std::get<std::string>(a[m]) < std::get<std::string>(b[m]);
  });
}

CommandResult run_eval(const RunConfig& config) {
  CommandResult out;
  out.table.columns = eval_schema();
  for (double r : config.r_values)
    for (const Evaluation& e : evaluate_all(r, config)) {
      out.table.rows.push_back(eval_row(r, e));
      if (is_failure(e.status)) out.exit_code = kExitPartialFailure;
    }
  sort_rows(out.table);
  return out;
}

CommandResult run_compare(const RunConfig& config) {
  CommandResult out;
  out.table.columns = compare_schema();
  for (double r : config.r_values) {
    const std::optional<double> ref = reference_value(r);
    for (const Evaluation& e : evaluate_all(r, config)) {
      Row row = eval_row(r, e);
      Cell deviation = std::monostate{};
      if (ref && e.value) deviation = *e.value - *ref;
      row.insert(row.end() - 2, {opt(ref), deviation});
      out.table.rows.push_back(std::move(row));
      if (is_failure(e.status)) out.exit_code = kExitPartialFailure;
    }
  }
  sort_rows(out.table);
  return out;
}

CommandResult run_bounds(const RunConfig& config) {
  CommandResult out;
  out.table.columns = bounds_schema();
  for (double r : config.r_values) {
    const std::optional<double> ref = reference_value(r);
    std::vector<Row> rows;
    for (const auto& m : config.methods) {
      BoundResult b{m, std::nullopt, std::nullopt};
      std::string status = "ok";
      try {
        if (m == "makai") b = makai_bounds(r);
        else if (m == "alzer") b = alzer_bounds(r);
        else if (m == "milovanovic_pogany") b = mp_upper(r);
        else if (m == "cf_convergent") b = cf_bounds(r, config.k, config.l);
        else if (m == "closed_form(2)") b = closed_form_bounds(r, 2);
        else if (m == "closed_form(3)") b = closed_form_bounds(r, 3);
      } catch (const std::exception& e) {
        status = std::string("error: ") + e.what();
        out.exit_code = kExitPartialFailure;
      }
      if (m == "cf_convergent" && status != "ok")
        b.method = "cf_convergent(" + std::to_string(config.k) + "," + std::to_string(config.l) + ")";
      Cell lower_gap = std::monostate{};
      Cell upper_gap = std::monostate{};
      if (ref && b.lower) lower_gap = *ref - *b.lower;
      if (ref && b.upper) upper_gap = *b.upper - *ref;
      rows.push_back({r, b.method, opt(b.lower), opt(b.upper), opt(ref), lower_gap, upper_gap, false, false, status});
    }
    auto flag_best = [&](std::size_t value_col, std::size_t flag_col, bool larger_is_better) {
      std::optional<std::size_t> best;
      for (std::size_t i = 0; i < rows.size(); ++i) {
        const double* v = std::get_if<double>(&rows[i][value_col]);
        if (!v) continue;
        const double* b = best ? std::get_if<double>(&rows[*best][value_col]) : nullptr;
        if (!b || (larger_is_better ? *v > *b : *v < *b)) best = i;
      }
      if (best) rows[*best][flag_col] = true;
    };
    flag_best(2, 7, true);
    flag_best(3, 8, false);
    for (auto& row : rows) out.table.rows.push_back(std::move(row));
  }
  sort_rows(out.table);
  return out;
}

CommandResult run_bench(const RunConfig& config) {
  CommandResult out;
  out.table.columns = bench_schema();
  for (double r : config.r_values) {
    std::vector<Row> rows;
    std::optional<std::int64_t> baseline;
    for (const auto& m : config.methods) {
      std::function<std::pair<std::size_t, bool>()> job;
      if (m == "direct_truncated") {
        job = [&] {
          g_sink = mathieu_truncated(r, config.tol).upper;
          return std::pair{truncated_terms_required(r, config.tol), true};
        };
      } else if (m == "direct_enclosure") {
        job = [&] {
          g_sink = mathieu_direct(r, config.tol).upper;
          return std::pair{direct_terms_required(r, config.tol), true};
        };
      } else {
        const int k = std::stoi(m.substr(4));
        job = [&, k] {
          const CertifiedValue v = tail_identity_to_width(r, k, config.tol, config.max_terms);
          g_sink = v.enclosure.upper;
          return std::pair{v.terms_used, v.target_met};
        };
      }
      Row row{r, m, config.tol, std::monostate{}, std::monostate{}, std::monostate{},
              static_cast<std::int64_t>(config.repeats), std::monostate{}, "ok"};
      try {
        std::vector<std::int64_t> samples;
        std::pair<std::size_t, bool> result{};
        for (int i = 0; i < config.repeats; ++i) {
          const auto start = Clock::now();
          result = job();
          samples.push_back(elapsed_ns(start));
        }
        row[3] = static_cast<std::int64_t>(result.first);
        row[4] = result.second;
        row[5] = median(samples);
        if (!result.second) row[8] = std::string("target_not_met");
        if (m == "direct_truncated") baseline = static_cast<std::int64_t>(result.first);
      } catch (const std::exception& e) {
        row[8] = std::string("error: ") + e.what();
      }
      rows.push_back(std::move(row));
    }
    for (auto& row : rows) {
      if (const auto* terms = std::get_if<std::int64_t>(&row[3]); terms && baseline && *terms > 0)
        row[7] = static_cast<double>(*baseline) / static_cast<double>(*terms);
      if (baseline && std::get<std::string>(row[1]) == "cf_k3" && std::holds_alternative<double>(row[7]))
      {
        char note[160];
        std::snprintf(note, sizeof note, "r = %g: cf_k3 uses %lld terms, %.4gx fewer than plain truncation", r,
                      static_cast<long long>(std::get<std::int64_t>(row[3])), std::get<double>(row[7]));
        out.notes.emplace_back(note);
      }
      out.table.rows.push_back(std::move(row));
    }
  }
  sort_rows(out.table);
  return out;
}

CommandResult run_apery(const RunConfig& config) {
  CommandResult out;
  out.table.columns = apery_schema();
  const double zeta = zeta3();
  ConvergentStepper<double> stepper(apery_form());
  for (int n = 1; n <= config.apery_terms; ++n) {
    const double v = stepper.advance().value;
    out.table.rows.push_back({static_cast<std::int64_t>(n), v, v - zeta});
  }
  return out;
}

CommandResult run_command(const RunConfig& config) {
  switch (config.command) {
    case Command::Eval: return run_eval(config);
    case Command::Compare: return run_compare(config);
    case Command::Bounds: return run_bounds(config);
    case Command::Bench: return run_bench(config);
    case Command::Apery: return run_apery(config);
    case Command::Selftest: return run_selftest(config);
  }
  return {};
}

}  // namespace mcf::cli
