// tempo: scenario runner and reference-table generator for the tempo library.
//
// Subcommands:
//   tempo run <scenario.json>   execute one scenario file
//   tempo reproduce <table-id>  emit a pinned reference table with PASS/FAIL checks
//
// Exit codes: 0 success, 1 malformed scenario/arguments, 2 domain error
// reported by the library.

#include <charconv>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <initializer_list>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "tempo/tempo.hpp"

using nlohmann::json;

namespace {

constexpr std::uint64_t default_seed = 1;

struct SchemaError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string fmt6(double v) {
  char buf[64];
  const auto result = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 6);
  return std::string(buf, result.ptr);
}

// ---------------------------------------------------------------------------
// schema helpers

void check_fields(const json& obj, const std::string& where,
                  std::initializer_list<const char*> required,
                  std::initializer_list<const char*> optional) {
  if (!obj.is_object()) {
    throw SchemaError(where + " must be an object");
  }
  for (const auto& [key, value] : obj.items()) {
    bool known = false;
    for (const char* name : required) known = known || key == name;
    for (const char* name : optional) known = known || key == name;
    if (!known) {
      throw SchemaError("unknown field '" + key + "' in " + where);
    }
  }
  for (const char* name : required) {
    if (!obj.contains(name)) {
      throw SchemaError(where + ": missing required field '" + name + "'");
    }
  }
}

double get_number(const json& obj, const std::string& where, const char* key) {
  const auto& value = obj.at(key);
  if (!value.is_number()) {
    throw SchemaError(where + ": field '" + std::string(key) + "' must be a number");
  }
  return value.get<double>();
}

double get_number_or(const json& obj, const std::string& where, const char* key,
                     double fallback) {
  if (!obj.contains(key)) return fallback;
  return get_number(obj, where, key);
}

long get_integer(const json& obj, const std::string& where, const char* key) {
  const auto& value = obj.at(key);
  if (!value.is_number_integer()) {
    throw SchemaError(where + ": field '" + std::string(key) + "' must be an integer");
  }
  return value.get<long>();
}

std::string get_string(const json& obj, const std::string& where, const char* key) {
  const auto& value = obj.at(key);
  if (!value.is_string()) {
    throw SchemaError(where + ": field '" + std::string(key) + "' must be a string");
  }
  return value.get<std::string>();
}

bool get_bool_or(const json& obj, const std::string& where, const char* key, bool fallback) {
  if (!obj.contains(key)) return fallback;
  const auto& value = obj.at(key);
  if (!value.is_boolean()) {
    throw SchemaError(where + ": field '" + std::string(key) + "' must be a boolean");
  }
  return value.get<bool>();
}

tempo::MembershipParams membership_from(const json& params, const std::string& where) {
  if (!params.contains("membership")) return tempo::MembershipParams::defaults();
  const auto& spec = params.at("membership");
  const std::string sub = where + ".membership";
  check_fields(spec, sub, {"alpha", "beta"}, {});
  return tempo::MembershipParams(get_number(spec, sub, "alpha"), get_number(spec, sub, "beta"));
}

// ---------------------------------------------------------------------------
// output helpers

class Csv {
 public:
  void row(std::initializer_list<std::string> cells) {
    bool first = true;
    for (const auto& cell : cells) {
      if (!first) out_ << ',';
      out_ << cell;
      first = false;
    }
    out_ << '\n';
  }

  void comment(const std::string& text) { out_ << "# " << text << '\n'; }

  std::string str() const { return out_.str(); }

 private:
  std::ostringstream out_;
};

std::string check_line(const std::string& label, double actual, double expected,
                       double tolerance) {
  const bool pass = std::abs(actual - expected) <= tolerance;
  return "check " + label + ": " + fmt6(actual) + " expected " + fmt6(expected) +
         " tolerance " + fmt6(tolerance) + (pass ? " PASS" : " FAIL");
}

// ---------------------------------------------------------------------------
// scenario handlers

std::string run_time_preference(const json& params) {
  check_fields(params, "parameters", {"m", "M", "W0"}, {"s_m", "s_M", "n", "membership"});
  tempo::IntertemporalChoice choice;
  choice.m = get_number(params, "parameters", "m");
  choice.M = get_number(params, "parameters", "M");
  choice.W0 = get_number(params, "parameters", "W0");
  choice.s_m = get_number_or(params, "parameters", "s_m", 1.0);
  choice.s_M = get_number_or(params, "parameters", "s_M", 1.0);
  choice.n = get_number_or(params, "parameters", "n", 1.0);
  const auto goal = membership_from(params, "parameters");

  const auto result = tempo::prefer_delayed(choice, goal);
  json out;
  out["kind"] = "time_preference";
  out["decision"] = result.decision == tempo::Preference::Later ? "later" : "sooner";
  out["sooner_factor"] = result.sooner_factor;
  out["later_factor"] = result.later_factor;
  return out.dump(2) + "\n";
}

std::string run_reversal(const json& params) {
  check_fields(params, "parameters", {"M1", "M2", "W0", "s1", "s2", "n_max"}, {"membership"});
  const double M1 = get_number(params, "parameters", "M1");
  const double M2 = get_number(params, "parameters", "M2");
  const double W0 = get_number(params, "parameters", "W0");
  const double s1 = get_number(params, "parameters", "s1");
  const double s2 = get_number(params, "parameters", "s2");
  const long n_max = get_integer(params, "parameters", "n_max");
  const auto goal = membership_from(params, "parameters");

  const auto schedule =
      tempo::reversal_schedule(M1, M2, W0, s1, s2, static_cast<int>(n_max), goal);
  Csv csv;
  csv.row({"n", "m1_factor", "m2_factor", "winner"});
  for (const auto& step : schedule.steps) {
    csv.row({fmt6(step.n), fmt6(step.m1_factor), fmt6(step.m2_factor),
             step.prefers_m2 ? "M2" : "M1"});
  }
  csv.comment("reversal_at = " +
              (schedule.reversal_at ? std::to_string(*schedule.reversal_at)
                                    : std::string("none")));
  return csv.str();
}

std::string run_discount_curve(const json& params) {
  check_fields(params, "parameters", {"h", "rho", "n_max"}, {"step"});
  const double h = get_number(params, "parameters", "h");
  const double rho = get_number(params, "parameters", "rho");
  const double n_max = get_number(params, "parameters", "n_max");
  const double step = get_number_or(params, "parameters", "step", 1.0);
  if (!(step > 0.0)) {
    throw SchemaError("parameters: field 'step' must be positive");
  }
  const tempo::DiscountParams discount_params(h, rho);

  Csv csv;
  csv.row({"delay_periods", "discount_factor"});
  for (long i = 0;; ++i) {
    const double n = i * step;
    if (n > n_max + 1e-12) break;
    csv.row({fmt6(n), fmt6(tempo::discount(discount_params, n))});
  }
  return csv.str();
}

std::string run_fit(const json& params) {
  check_fields(params, "parameters", {}, {"points", "csv", "allow_positive_h"});
  const bool has_points = params.contains("points");
  const bool has_csv = params.contains("csv");
  if (has_points == has_csv) {
    throw SchemaError("parameters: provide exactly one of 'points' or 'csv'");
  }
  const bool allow_positive_h =
      get_bool_or(params, "parameters", "allow_positive_h", false);

  std::vector<tempo::DiscountPoint> points;
  if (has_points) {
    const auto& array = params.at("points");
    if (!array.is_array() || array.empty()) {
      throw SchemaError("parameters: field 'points' must be a non-empty array");
    }
    for (const auto& entry : array) {
      if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number() ||
          !entry[1].is_number()) {
        throw SchemaError("parameters: field 'points' must contain [delay, discount] pairs");
      }
      points.push_back({entry[0].get<double>(), entry[1].get<double>()});
    }
  } else {
    points = tempo::read_discount_csv(get_string(params, "parameters", "csv"));
  }

  const auto fit = tempo::fit_discount(points, allow_positive_h);
  json out;
  out["kind"] = "fit";
  out["h"] = fit.h;
  out["rho"] = fit.rho;
  out["residual"] = fit.residual;
  out["converged"] = fit.converged;
  out["points_used"] = points.size();
  return out.dump(2) + "\n";
}

std::string run_prospect_curve(const json& params) {
  check_fields(params, "parameters", {"p", "rho"}, {"x_min", "x_max", "step"});
  const double p = get_number(params, "parameters", "p");
  const double rho = get_number(params, "parameters", "rho");
  const double x_min = get_number_or(params, "parameters", "x_min", -0.99);
  const double x_max = get_number_or(params, "parameters", "x_max", 1.0);
  const double step = get_number_or(params, "parameters", "step", 0.01);
  if (!(step > 0.0)) {
    throw SchemaError("parameters: field 'step' must be positive");
  }
  if (!(x_min < x_max)) {
    throw SchemaError("parameters: field 'x_min' must be below 'x_max'");
  }
  const tempo::SCurveParams curve(p, rho);

  Csv csv;
  csv.row({"x", "value"});
  for (long i = 0;; ++i) {
    const double x = x_min + i * step;
    if (x > x_max + 1e-12) break;
    csv.row({fmt6(x), fmt6(tempo::s_curve(curve, x))});
  }
  const auto crossover = tempo::risk_crossover(curve);
  csv.comment("crossover = " + (crossover ? fmt6(*crossover) : std::string("none")));
  return csv.str();
}

std::string run_lottery(const json& params, std::uint64_t seed) {
  check_fields(params, "parameters", {"outcomes", "W0"}, {"simulate_periods"});
  const auto& array = params.at("outcomes");
  if (!array.is_array() || array.empty()) {
    throw SchemaError("parameters: field 'outcomes' must be a non-empty array");
  }
  std::vector<std::pair<double, double>> outcomes;
  for (const auto& entry : array) {
    if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number() ||
        !entry[1].is_number()) {
      throw SchemaError("parameters: field 'outcomes' must contain [amount, probability] pairs");
    }
    outcomes.emplace_back(entry[0].get<double>(), entry[1].get<double>());
  }
  const double W0 = get_number(params, "parameters", "W0");
  const tempo::Lottery lottery(outcomes, W0);

  json out;
  out["kind"] = "lottery";
  out["changes"] = lottery.changes();
  out["expected_change"] = lottery.expected_change();
  out["certain"] = lottery.is_certain();
  out["fair"] = lottery.expected_change() > 0.0;

  if (params.contains("simulate_periods")) {
    const long periods = get_integer(params, "parameters", "simulate_periods");
    double estimate = 0.0;
    if (outcomes.size() == 1) {
      estimate = tempo::simulate_time_average(outcomes[0].first / W0, outcomes[0].second,
                                              periods, seed);
    } else if (outcomes.size() == 2) {
      estimate = tempo::simulate_disjunction_average(outcomes[0].first / W0,
                                                     outcomes[0].second,
                                                     outcomes[1].first / W0,
                                                     outcomes[1].second, periods, seed);
    } else {
      throw SchemaError("parameters: 'simulate_periods' supports one or two outcomes");
    }
    out["simulated_factor"] = estimate;
    out["seed"] = seed;
  }
  return out.dump(2) + "\n";
}

tempo::Hypothesis hypothesis_from(const json& spec, const std::string& where) {
  check_fields(spec, where, {"label", "change", "sense", "quantifier"}, {});
  const auto quantifier = tempo::quantifier_from_string(get_string(spec, where, "quantifier"));
  if (!quantifier) {
    throw SchemaError(where + ": field 'quantifier' must be one of N, F, G, GF");
  }
  return tempo::Hypothesis(get_string(spec, where, "label"),
                           get_number(spec, where, "change"), get_number(spec, where, "sense"),
                           *quantifier);
}

std::string run_compare(const json& params) {
  check_fields(params, "parameters", {"a", "b", "mode"}, {"membership"});
  const auto a = hypothesis_from(params.at("a"), "parameters.a");
  const auto b = hypothesis_from(params.at("b"), "parameters.b");
  const std::string mode_name = get_string(params, "parameters", "mode");
  tempo::CompareMode mode;
  if (mode_name == "meiosis") {
    mode = tempo::CompareMode::Meiosis;
  } else if (mode_name == "hyperbole") {
    mode = tempo::CompareMode::Hyperbole;
  } else {
    throw SchemaError("parameters: field 'mode' must be 'meiosis' or 'hyperbole'");
  }
  const auto goal = membership_from(params, "parameters");

  const auto result = tempo::compare_hypotheses(a, b, goal, mode);
  json out;
  out["kind"] = "compare";
  out["winner"] = result.winner;
  out["change_a"] = result.change_a;
  out["change_b"] = result.change_b;
  return out.dump(2) + "\n";
}

std::string run_rates(const json& params) {
  check_fields(params, "parameters", {"rows"}, {});
  const auto& array = params.at("rows");
  if (!array.is_array() || array.empty()) {
    throw SchemaError("parameters: field 'rows' must be a non-empty array");
  }
  json rows = json::array();
  bool monotone = true;
  double prev = 0.0;
  bool first = true;
  for (const auto& entry : array) {
    check_fields(entry, "parameters.rows[]", {"m", "M", "t"}, {});
    const double m = get_number(entry, "parameters.rows[]", "m");
    const double M = get_number(entry, "parameters.rows[]", "M");
    const double t = get_number(entry, "parameters.rows[]", "t");
    const double rate = tempo::annualized_rate(m, M, t);
    json row;
    row["m"] = m;
    row["M"] = M;
    row["t"] = t;
    row["annual_rate"] = rate;
    rows.push_back(row);
    if (!first && rate > prev) monotone = false;
    prev = rate;
    first = false;
  }
  json out;
  out["kind"] = "rates";
  out["rows"] = rows;
  out["monotone_decreasing"] = monotone;
  return out.dump(2) + "\n";
}

// ---------------------------------------------------------------------------
// reference tables

std::string table_thaler_magnitude(double tolerance) {
  const double tol = tolerance > 0.0 ? tolerance : 0.01;
  struct Row {
    double m, M, t, expected;
  };
  const Row rows[] = {{15, 30, 0.25, 2.77}, {250, 300, 0.25, 0.73}, {3000, 3500, 0.25, 0.62}};
  Csv csv;
  csv.row({"amount_now", "amount_later", "delay_years", "annual_rate", "expected_rate",
           "status"});
  bool monotone = true;
  double prev = 0.0;
  bool first = true;
  for (const auto& row : rows) {
    const double rate = tempo::annualized_rate(row.m, row.M, row.t);
    const bool pass = std::abs(rate - row.expected) <= tol;
    csv.row({fmt6(row.m), fmt6(row.M), fmt6(row.t), fmt6(rate), fmt6(row.expected),
             pass ? "PASS" : "FAIL"});
    if (!first && rate > prev) monotone = false;
    prev = rate;
    first = false;
  }
  csv.comment(std::string("annual rate decreases with reward magnitude: ") +
              (monotone ? "PASS" : "FAIL"));
  return csv.str();
}

std::string table_thaler_time(double tolerance) {
  const double tol = tolerance > 0.0 ? tolerance : 0.01;
  struct Row {
    double m, M, t, stated;
  };
  const Row rows[] = {{250, 300, 1.0 / 12.0, 2.19}, {250, 400, 1.0, 1.20}, {250, 1000, 10.0, 0.19}};
  Csv csv;
  csv.row({"amount_now", "amount_later", "delay_years", "stated_rate", "recomputed_rate",
           "status"});
  for (const auto& row : rows) {
    const double rate = tempo::annualized_rate(row.m, row.M, row.t);
    const bool pass = std::abs(rate - row.stated) <= tol;
    csv.row({fmt6(row.m), fmt6(row.M), fmt6(row.t), fmt6(row.stated), fmt6(rate),
             pass ? "PASS" : "MISMATCH"});
  }
  csv.comment("the stated one-year and ten-year rates cannot be recomputed from their amounts;");
  csv.comment("the recomputed_rate column carries ln(M/m)/t and the rows are flagged MISMATCH");
  csv.comment("instead of silently substituting either value");
  return csv.str();
}

std::string table_discount_family(double tolerance) {
  const double tol = tolerance > 0.0 ? tolerance : 1e-4;
  const tempo::DiscountParams exponential(-1e-12, 0.005);
  const tempo::DiscountParams quasi(-3.0, 0.7);
  const tempo::DiscountParams hyper1(-3.0, 0.0175);
  const tempo::DiscountParams hyper2(-5.0, 0.05);
  Csv csv;
  csv.row({"delay_periods", "exponential", "quasi_hyperbolic", "hyperbolic_1", "hyperbolic_2"});
  for (int n = 0; n <= 60; ++n) {
    csv.row({fmt6(n), fmt6(tempo::discount(exponential, n)), fmt6(tempo::discount(quasi, n)),
             fmt6(tempo::discount(hyper1, n)), fmt6(tempo::discount(hyper2, n))});
  }
  csv.comment("exponential rho=0.005 (h->0); quasi_hyperbolic h=-3 rho=0.7;");
  csv.comment("hyperbolic_1 h=-3 rho=0.0175; hyperbolic_2 h=-5 rho=0.05");
  csv.comment(check_line("hyperbolic_1 at n=12", tempo::discount(hyper1, 12.0), 0.8497, tol));
  return csv.str();
}

std::string table_gain_family(double tolerance) {
  const double tol = tolerance > 0.0 ? tolerance : 1e-4;
  Csv csv;
  csv.row({"x", "tangent_half", "gain_half", "tangent_tenth", "gain_tenth"});
  for (int i = 0; i <= 200; ++i) {
    const double x = i / 100.0;
    csv.row({fmt6(x), fmt6(0.5 * x), fmt6(tempo::meiotic_value(0.5, x)), fmt6(0.1 * x),
             fmt6(tempo::meiotic_value(0.1, x))});
  }
  csv.comment("concave gain curves (1+x)^p - 1 for p=1/2 and p=1/10 with tangent lines p*x");
  csv.comment(check_line("gain_half at x=1", tempo::meiotic_value(0.5, 1.0), 0.4142, tol));
  return csv.str();
}

std::string table_s_curve(double tolerance) {
  const double tol = tolerance > 0.0 ? tolerance : 0.01;
  const tempo::SCurveParams curve(0.5, 1.2);
  Csv csv;
  csv.row({"x", "identity", "s_curve"});
  for (int i = 0; i <= 199; ++i) {
    const double x = (i - 99) / 100.0;
    csv.row({fmt6(x), fmt6(x), fmt6(tempo::s_curve(curve, x))});
  }
  const auto crossover = tempo::risk_crossover(curve);
  csv.comment("p=0.5, rho=1.2; risk seeking between the crossover and 0, ruin aversion below");
  if (crossover) {
    csv.comment("crossover = " + fmt6(*crossover));
    csv.comment(check_line("crossover", *crossover, -0.55, tol));
  } else {
    csv.comment("crossover = none FAIL");
  }
  return csv.str();
}

std::string table_loss_family(double tolerance) {
  const double tol = tolerance > 0.0 ? tolerance : 1e-4;
  const tempo::SCurveParams half(0.5, 1.2);
  const tempo::SCurveParams tenth(0.1, 1.2);
  Csv csv;
  csv.row({"x", "identity", "loss_half", "loss_tenth"});
  for (int i = 0; i <= 99; ++i) {
    const double x = (i - 99) / 100.0;
    csv.row({fmt6(x), fmt6(x), fmt6(tempo::hyperbolic_loss_value(half, x)),
             fmt6(tempo::hyperbolic_loss_value(tenth, x))});
  }
  csv.comment("convex loss curves (1 + p*rho*x)^(1/p) - 1 at rho=1.2 for p=1/2 and p=1/10");
  csv.comment(check_line("loss_half at x=-0.3", tempo::hyperbolic_loss_value(half, -0.3),
                         -0.3276, tol));
  return csv.str();
}

std::string table_subadditivity(double tolerance) {
  const double tol = tolerance > 0.0 ? tolerance : 1e-10;
  struct Row {
    double h, rho, a, b;
  };
  const Row rows[] = {{-1, 1, 1, 1}, {-3, 0.0175, 6, 6}, {-0.5, 0.2, 2, 3}};
  Csv csv;
  csv.row({"h", "rho", "a", "b", "divided", "undivided", "identity_gap", "status"});
  for (const auto& row : rows) {
    const tempo::DiscountParams params(row.h, row.rho);
    const auto split = tempo::subadditive_combine(params, row.a, row.b);
    const double x = row.rho * row.a;
    const double y = row.rho * row.b;
    const double gap = split.divided - tempo::gexp(row.h, -x - y + row.h * x * y);
    const bool pass = split.divided < split.undivided && std::abs(gap) <= tol;
    csv.row({fmt6(row.h), fmt6(row.rho), fmt6(row.a), fmt6(row.b), fmt6(split.divided),
             fmt6(split.undivided), fmt6(gap), pass ? "PASS" : "FAIL"});
  }
  csv.comment("divided = discount(a) * discount(b) is below undivided = discount(a+b) for h < 0;");
  csv.comment("identity_gap compares the divided product against the closed-form combination");
  return csv.str();
}

std::string reproduce_artifact(const std::string& id, double tolerance) {
  if (id == "thaler-magnitude") return table_thaler_magnitude(tolerance);
  if (id == "thaler-time") return table_thaler_time(tolerance);
  if (id == "fig3") return table_discount_family(tolerance);
  if (id == "fig4") return table_gain_family(tolerance);
  if (id == "fig5") return table_s_curve(tolerance);
  if (id == "fig6") return table_loss_family(tolerance);
  if (id == "subadditivity-demo") return table_subadditivity(tolerance);
  throw SchemaError(
      "unknown table id '" + id +
      "'; valid ids: thaler-magnitude, thaler-time, fig3, fig4, fig5, fig6, subadditivity-demo");
}

// ---------------------------------------------------------------------------
// driver

std::string run_scenario(const std::string& path, std::uint64_t seed,
                         std::string& output_path) {
  std::ifstream in(path);
  if (!in) {
    throw SchemaError("cannot read scenario file '" + path + "'");
  }
  json scenario;
  try {
    scenario = json::parse(in);
  } catch (const json::parse_error& err) {
    throw SchemaError("scenario is not valid JSON: " + std::string(err.what()));
  }
  check_fields(scenario, "scenario", {"kind", "parameters"}, {"output"});
  const std::string kind = get_string(scenario, "scenario", "kind");
  if (scenario.contains("output")) {
    output_path = get_string(scenario, "scenario", "output");
  }
  const auto& params = scenario.at("parameters");
  if (!params.is_object()) {
    throw SchemaError("scenario: field 'parameters' must be an object");
  }

  if (kind == "time_preference") return run_time_preference(params);
  if (kind == "reversal") return run_reversal(params);
  if (kind == "discount_curve") return run_discount_curve(params);
  if (kind == "fit") return run_fit(params);
  if (kind == "prospect_curve") return run_prospect_curve(params);
  if (kind == "lottery") return run_lottery(params, seed);
  if (kind == "compare") return run_compare(params);
  if (kind == "rates") return run_rates(params);
  throw SchemaError("scenario: unknown kind '" + kind +
                    "'; valid kinds: time_preference, reversal, discount_curve, fit, "
                    "prospect_curve, lottery, compare, rates");
}

void deliver(const std::string& content, const std::string& out_path, bool quiet) {
  if (out_path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) {
    throw std::runtime_error("cannot write output file '" + out_path + "'");
  }
  out << content;
  out.close();
  if (!out) {
    throw std::runtime_error("failed while writing output file '" + out_path + "'");
  }
  if (!quiet) {
    std::cout << "wrote " << out_path << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"fuzzy-temporal decision calculus scenarios"};
  app.require_subcommand(1);

  std::string scenario_path;
  std::string table_id;
  std::string out_path;
  std::uint64_t seed = default_seed;
  double tolerance = -1.0;
  bool quiet = false;

  auto* run_cmd = app.add_subcommand("run", "execute a scenario file");
  run_cmd->add_option("scenario", scenario_path, "path to a scenario JSON file")->required();
  run_cmd->add_option("--seed", seed, "seed for simulation scenarios");
  run_cmd->add_option("--out", out_path, "write the result artifact to this path");
  run_cmd->add_option("--tolerance", tolerance, "override PASS/FAIL thresholds");
  run_cmd->add_flag("--quiet", quiet, "suppress status chatter");

  auto* repro_cmd = app.add_subcommand("reproduce", "emit a pinned reference table");
  repro_cmd->add_option("id", table_id, "table id")->required();
  repro_cmd->add_option("--seed", seed, "seed for simulation scenarios");
  repro_cmd->add_option("--out", out_path, "write the result artifact to this path");
  repro_cmd->add_option("--tolerance", tolerance, "override PASS/FAIL thresholds");
  repro_cmd->add_flag("--quiet", quiet, "suppress status chatter");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& help) {
    return app.exit(help);
  } catch (const CLI::ParseError& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 1;
  }

  try {
    std::string content;
    std::string scenario_out;
    if (run_cmd->parsed()) {
      content = run_scenario(scenario_path, seed, scenario_out);
    } else {
      content = reproduce_artifact(table_id, tolerance);
    }
    const std::string target = !out_path.empty() ? out_path : scenario_out;
    deliver(content, target, quiet);
    return 0;
  } catch (const SchemaError& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 1;
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 2;
  }
}
