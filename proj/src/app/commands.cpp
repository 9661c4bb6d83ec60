#include "app/commands.hpp"

#include <CLI11.hpp>
#include <atomic>
#include <cmath>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>
#include <thread>

#include "probjam/covertness.hpp"
#include "probjam/detection.hpp"
#include "probjam/format.hpp"
#include "probjam/optimize.hpp"
#include "probjam/oracle.hpp"
#include "probjam/simulate.hpp"
#include "probjam/throughput.hpp"

namespace probjam::app {

namespace {

const double kNan = std::nan("");

template <class T>
T require_feasible(Outcome<T> outcome) {
  if (auto* bad = std::get_if<Infeasible>(&outcome)) throw InfeasibleError(bad->detail);
  return std::get<T>(std::move(outcome));
}

unsigned thread_count(const Config& cfg) {
  const auto n = cfg.integer_or("threads", 0);
  if (n > 0) return static_cast<unsigned>(n);
  return std::max(1u, std::thread::hardware_concurrency());
}

// RFC 4180 quoting, only when needed.
std::string cell_text(const Cell& cell) {
  if (const auto* d = std::get_if<double>(&cell)) return format_double(*d);
  const std::string& s = std::get<std::string>(cell);
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string quoted = "\"";
  for (char c : s) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + "\"";
}

nlohmann::ordered_json cell_json(const Cell& cell) {
  if (const auto* d = std::get_if<double>(&cell)) {
    if (std::isfinite(*d)) return *d;
    return nullptr;
  }
  return std::get<std::string>(cell);
}

// ---------------------------------------------------------------------------

void add_solution_rows(Table& t, const DesignSolution& sol) {
  t.columns = {"field", "value", "range", "constraint"};
  t.rows.push_back({"case_label", sol.case_label(), "", ""});
  t.rows.push_back({"omega_star", sol.omega_star(), "", ""});
  const auto point = sol.representative();
  const auto ranges = sol.ranges_at_representative();
  for (std::size_t i = 0; i < ranges.size(); ++i) {
    const auto& [name, range] = ranges[i];
    t.rows.push_back({name, point.at(name), range.to_string(), sol.box()[i].constraint});
  }
}

void add_verification_rows(Table& t, const Verification& v) {
  t.rows.push_back({"oracle_omega", v.found_feasible ? v.oracle : kNan, "", ""});
  t.rows.push_back({"verify_gap", v.gap, "", "relative; <= 1e-3 passes"});
  t.rows.push_back({"verify_evaluations", static_cast<double>(v.evaluations), "", ""});
  t.rows.push_back({"verify_pass", v.gap <= 1e-3 ? "yes" : "no", "", ""});
}

struct SweepGrid {
  std::vector<double> values;
  bool in_db = false;
};

SweepGrid sweep_grid(const Config& cfg, SweepAxis axis) {
  SweepGrid grid;
  const bool db = cfg.has("start_db") || cfg.has("stop_db") || cfg.has("step_db");
  const bool lin = cfg.has("start") || cfg.has("stop") || cfg.has("step");
  if (db && lin) throw ConfigError("sweep range must use either start/stop/step or *_db keys");
  if (db && axis == SweepAxis::kEpsilon) throw ConfigError("epsilon sweeps take linear ranges");
  grid.in_db = db;
  const std::string sfx = db ? "_db" : "";
  const double start = cfg.number("start" + sfx);
  const double stop = cfg.number("stop" + sfx);
  const double step = cfg.number("step" + sfx);
  if (!(std::isfinite(start) && std::isfinite(stop) && stop >= start)) {
    throw ConfigError("sweep range: need finite start <= stop");
  }
  if (!(step > 0.0 && std::isfinite(step))) throw ConfigError("sweep range: step must be > 0");
  const double cells = std::floor((stop - start) / step * (1.0 + 1e-12) + 1e-9) + 1.0;
  if (cells > 1e6) throw ConfigError("sweep range: more than 10^6 cells");
  for (int k = 0; k < static_cast<int>(cells); ++k) grid.values.push_back(start + k * step);
  return grid;
}

}  // namespace

std::string render(const Table& table, OutputFormat format) {
  if (format == OutputFormat::kJson) {
    nlohmann::ordered_json doc;
    doc["command"] = table.command;
    nlohmann::ordered_json config = nlohmann::ordered_json::object();
    for (const auto& [k, v] : table.config) config[k] = v;
    doc["config"] = config;
    doc["notes"] = table.notes;
    doc["columns"] = table.columns;
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const auto& row : table.rows) {
      nlohmann::ordered_json obj = nlohmann::ordered_json::object();
      for (std::size_t i = 0; i < table.columns.size(); ++i) {
        obj[table.columns[i]] = cell_json(row[i]);
      }
      rows.push_back(obj);
    }
    doc["rows"] = rows;
    return doc.dump(2) + "\n";
  }
  std::string out = "# probjam " + table.command + "\n";
  for (const auto& [k, v] : table.config) out += "# " + k + "=" + v + "\n";
  for (const auto& note : table.notes) out += "# " + note + "\n";
  for (std::size_t i = 0; i < table.columns.size(); ++i) {
    out += (i ? "," : "") + table.columns[i];
  }
  out += "\n";
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) out += (i ? "," : "") + cell_text(row[i]);
    out += "\n";
  }
  return out;
}

Table cmd_detect(const Config& cfg) {
  SystemParams p;
  p.p_a = cfg.number("p_a");
  p.p_min = cfg.number("p_min");
  p.p_max = cfg.number("p_max");
  p.p_j = cfg.number("p_j");
  p.sigma_w2 = cfg.number_or("sigma_w2", 1.0);
  const DetectionResult r = min_detection_error(p);

  Table t;
  t.command = "detect";
  t.config = cfg.entries();
  t.columns = {"xi_star", "gamma_star", "branch", "tie"};
  t.rows.push_back({r.xi_star, r.gamma_star.to_string(), std::string(branch_name(r.branch)),
                    r.tie ? "yes" : "no"});
  return t;
}

Table cmd_optimize(const Config& cfg, View view, bool verify) {
  Table t;
  t.config = cfg.entries();
  const double eps = cfg.number("epsilon");
  const double p_m = cfg.number("p_m");
  const double sigma_b2 = cfg.number_or("sigma_b2", 1.0);

  if (view == View::kJammer) {
    t.command = "optimize view=jammer";
    JammerProblem jp{cfg.number("p_a"), cfg.number("rate"), eps, p_m, sigma_b2};
    const DesignSolution sol = require_feasible(optimize_jammer(jp));
    add_solution_rows(t, sol);
    t.rows.push_back(
        {"lambda_star", jp.rate > 0.0 ? 1.0 - sol.omega_star() / jp.rate : 0.0, "", ""});
    if (verify) add_verification_rows(t, verify_jammer(jp, sol));
  } else if (view == View::kAlice) {
    t.command = "optimize view=alice";
    AliceProblem ap{cfg.number("p_j"), cfg.number("p_min"), cfg.number("p_max"), eps, p_m,
                    sigma_b2};
    const DesignSolution sol = require_feasible(optimize_alice(ap));
    add_solution_rows(t, sol);
    if (verify) add_verification_rows(t, verify_alice(ap, sol));
  } else {
    t.command = "optimize view=global";
    GlobalProblem gp{eps, p_m, sigma_b2};
    const DesignSolution sol = optimize_global(gp);
    add_solution_rows(t, sol);
    t.rows.push_back({"rho_star", rho_star(eps), "", "rate switches to C_f at p_m/sigma_b2 >= rho_star"});
    t.rows.push_back({"omega_c", continuous_baseline(gp).omega_c_star, "", "always-on jammer"});
    if (verify) add_verification_rows(t, verify_global(gp, sol));
  }
  return t;
}

Table cmd_sweep(const Config& cfg, SweepAxis axis) {
  const SweepGrid grid = sweep_grid(cfg, axis);
  const double sigma_b2 = cfg.number_or("sigma_b2", 1.0);
  double fixed = 0.0;  // epsilon, or p_m / sigma_b2
  if (axis == SweepAxis::kEpsilon) {
    fixed = cfg.has("pm_over_sigma") ? cfg.number("pm_over_sigma")
                                     : cfg.number("p_m") / sigma_b2;
  } else {
    fixed = cfg.number("epsilon");
  }

  Table t;
  t.command = axis == SweepAxis::kEpsilon ? "sweep axis=epsilon" : "sweep axis=pm_over_sigma";
  t.config = cfg.entries();
  t.notes.push_back(std::string("axis_unit=") + (grid.in_db ? "db" : "linear"));
  t.columns = {"axis", "omega_p", "omega_c", "rate", "pa", "pj", "pmin", "pmax", "rate_choice"};
  t.rows.resize(grid.values.size());

  auto cell = [&](std::size_t i) {
    const double x = grid.values[i];
    GlobalProblem gp;
    gp.sigma_b2 = sigma_b2;
    if (axis == SweepAxis::kEpsilon) {
      gp.epsilon = x;
      gp.p_m = fixed * sigma_b2;
    } else {
      gp.epsilon = fixed;
      gp.p_m = (grid.in_db ? std::pow(10.0, x / 10.0) : x) * sigma_b2;
    }
    try {
      const DesignSolution sol = optimize_global(gp);
      const double omega_c = continuous_baseline(gp).omega_c_star;
      const auto pt = sol.representative();
      const bool cf = sol.case_label().ends_with("Cf");
      t.rows[i] = {x,          sol.omega_star(), omega_c,         pt.at("rate"), pt.at("p_a"),
                   pt.at("p_j"), pt.at("p_min"),   pt.at("p_max"), cf ? "Cf" : "Cn"};
    } catch (const InvalidParameter&) {
      t.rows[i] = {x, kNan, kNan, kNan, kNan, kNan, kNan, kNan, "infeasible"};
    }
  };

  const unsigned workers =
      static_cast<unsigned>(std::min<std::size_t>(thread_count(cfg), grid.values.size()));
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < grid.values.size(); i = next++) cell(i);
  };
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& th : pool) th.join();
  }
  return t;
}

Table cmd_simulate(const Config& cfg) {
  SystemParams p;
  p.p_a = cfg.number("p_a");
  p.p_min = cfg.number("p_min");
  p.p_max = cfg.number("p_max");
  p.p_j = cfg.number("p_j");
  p.sigma_w2 = cfg.number_or("sigma_w2", 1.0);
  p.sigma_b2 = cfg.number_or("sigma_b2", 1.0);
  validate_powers(p);

  SimConfig sc;
  sc.n = cfg.integer_or("n", sc.n);
  sc.trials = cfg.integer_or("trials", sc.trials);
  sc.seed = cfg.integer_or("seed", sc.seed);
  sc.hypothesis_mix = cfg.number_or("hypothesis_mix", sc.hypothesis_mix);
  sc.threads = thread_count(cfg);
  validate(sc);

  Table t;
  t.command = "simulate";
  t.config = cfg.entries();
  const DetectionResult det = min_detection_error(p);
  double gamma = 0.0;
  if (cfg.has("gamma")) {
    gamma = cfg.number("gamma");
  } else {
    gamma = det.gamma_star.representative();
    t.config["gamma"] = format_double(gamma);
  }
  t.notes.push_back("xi_star=" + format_double(det.xi_star) +
                    " gamma_star=" + det.gamma_star.to_string());
  t.columns = {"metric", "empirical", "stderr", "analytic"};

  const SimReport d = simulate_detection(p, gamma, sc);
  t.rows.push_back({"pfa", d.pfa->value, d.pfa->std_error, false_alarm(p, gamma)});
  t.rows.push_back({"pmd", d.pmd->value, d.pmd->std_error, missed_detection(p, gamma)});
  t.rows.push_back({"xi", d.xi->value, d.xi->std_error, total_error_at(p, gamma)});

  if (cfg.has("rate")) {
    p.rate = cfg.number("rate");
    const SimReport o = simulate_outage(p, sc);
    t.rows.push_back({"lambda", o.lambda->value, o.lambda->std_error, outage(p)});
    t.rows.push_back({"omega", *o.omega, p.rate * o.lambda->std_error, covert_throughput(p)});
  }
  return t;
}

// ---------------------------------------------------------------------------

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Covert communication with a probabilistic jammer"};
  app.require_subcommand(1);

  std::string config_path;
  std::vector<std::string> overrides;
  std::string format_name = "csv";
  std::string output_path;
  auto common = [&](CLI::App* sub) {
    sub->add_option("-c,--config", config_path, "key=value or JSON config file");
    sub->add_option("-s,--set", overrides, "override, key=value (repeatable)");
    sub->add_option("-f,--format", format_name, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("-o,--output", output_path, "write here instead of stdout");
  };

  auto* detect = app.add_subcommand("detect", "minimum detection error and optimal thresholds");
  common(detect);

  std::string view_name = "global";
  bool verify = false;
  auto* optimize = app.add_subcommand("optimize", "closed-form throughput maximization");
  common(optimize);
  optimize->add_option("--view", view_name, "jammer, alice or global")
      ->check(CLI::IsMember({"jammer", "alice", "global"}));
  optimize->add_flag("--verify", verify, "cross-check with the grid oracle");

  std::string axis_name;
  auto* sweep = app.add_subcommand("sweep", "global design over a parameter range");
  common(sweep);
  sweep->add_option("--axis", axis_name, "epsilon or pm_over_sigma")
      ->required()
      ->check(CLI::IsMember({"epsilon", "pm_over_sigma"}));

  auto* simulate = app.add_subcommand("simulate", "Monte Carlo detection and outage");
  common(simulate);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    Config cfg;
    if (!config_path.empty()) cfg = Config::load_file(config_path);
    for (const auto& o : overrides) cfg.apply_override(o);

    Table table;
    if (detect->parsed()) {
      table = cmd_detect(cfg);
    } else if (optimize->parsed()) {
      const View view = view_name == "jammer"  ? View::kJammer
                        : view_name == "alice" ? View::kAlice
                                               : View::kGlobal;
      table = cmd_optimize(cfg, view, verify);
    } else if (sweep->parsed()) {
      table = cmd_sweep(cfg, axis_name == "epsilon" ? SweepAxis::kEpsilon
                                                    : SweepAxis::kPmOverSigma);
    } else {
      table = cmd_simulate(cfg);
    }

    const std::string text =
        render(table, format_name == "json" ? OutputFormat::kJson : OutputFormat::kCsv);
    if (output_path.empty()) {
      out << text;
    } else {
      std::ofstream file(output_path, std::ios::binary);
      if (!file) throw ConfigError("cannot write '" + output_path + "'");
      file << text;
    }
    return 0;
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << "\n";
    return 2;
  } catch (const InvalidParameter& e) {
    err << "invalid parameter: " << e.what() << "\n";
    return 3;
  } catch (const InfeasibleError& e) {
    err << "infeasible: " << e.what() << "\n";
    return 4;
  }
}

}  // namespace probjam::app
