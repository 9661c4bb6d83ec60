#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>
#include <string>
#include <vector>

#include "app/commands.hpp"
#include "probjam/covertness.hpp"
#include "probjam/detection.hpp"
#include "probjam/optimize.hpp"
#include "probjam/simulate.hpp"
#include "probjam/throughput.hpp"

namespace py = pybind11;
using namespace probjam;

namespace {

py::dict solution_dict(const DesignSolution& sol) {
  py::dict ranges;
  for (const auto& [name, range] : sol.ranges_at_representative()) {
    ranges[py::str(name)] = py::make_tuple(range.lo(), range.hi());
  }
  py::dict out;
  out["case"] = sol.case_label();
  out["omega_star"] = sol.omega_star();
  out["design"] = sol.representative();
  out["ranges"] = ranges;
  return out;
}

py::object outcome_dict(const Outcome<DesignSolution>& outcome) {
  if (is_feasible(outcome)) return solution_dict(std::get<DesignSolution>(outcome));
  const auto& why = std::get<Infeasible>(outcome);
  py::dict out;
  out["infeasible"] = std::string(reason_name(why.reason));
  out["detail"] = why.detail;
  return std::move(out);
}

py::dict estimate(const std::optional<Estimate>& e) {
  py::dict out;
  if (e) {
    out["value"] = e->value;
    out["stderr"] = e->std_error;
  }
  return out;
}

py::dict report_dict(const SimReport& r) {
  py::dict out;
  out["trials"] = r.trials;
  if (r.xi) {
    out["pfa"] = estimate(r.pfa);
    out["pmd"] = estimate(r.pmd);
    out["xi"] = estimate(r.xi);
  }
  if (r.lambda) {
    out["lambda"] = estimate(r.lambda);
    out["omega"] = *r.omega;
  }
  return out;
}

SimConfig sim_config(std::uint64_t n, std::uint64_t trials, std::uint64_t seed, double mix,
                     unsigned threads) {
  SimConfig cfg;
  cfg.n = n;
  cfg.trials = trials;
  cfg.seed = seed;
  cfg.hypothesis_mix = mix;
  cfg.threads = threads;
  return cfg;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Covert link with a probabilistic jammer: detection, optimization, simulation";

  py::register_exception<InvalidParameter>(m, "InvalidParameter", PyExc_ValueError);

  py::class_<SystemParams>(m, "SystemParams")
      .def(py::init([](double p_a, double p_min, double p_max, double p_j, double sigma_w2,
                       double sigma_b2, double epsilon, double p_m, double rate) {
             return SystemParams{p_a, p_min, p_max, p_j, sigma_w2, sigma_b2, epsilon, p_m, rate};
           }),
           py::arg("p_a") = 0.0, py::arg("p_min") = 0.0, py::arg("p_max") = 0.0,
           py::arg("p_j") = 0.0, py::arg("sigma_w2") = 1.0, py::arg("sigma_b2") = 1.0,
           py::arg("epsilon") = 0.1, py::arg("p_m") = 1.0, py::arg("rate") = 0.0)
      .def_readwrite("p_a", &SystemParams::p_a)
      .def_readwrite("p_min", &SystemParams::p_min)
      .def_readwrite("p_max", &SystemParams::p_max)
      .def_readwrite("p_j", &SystemParams::p_j)
      .def_readwrite("sigma_w2", &SystemParams::sigma_w2)
      .def_readwrite("sigma_b2", &SystemParams::sigma_b2)
      .def_readwrite("epsilon", &SystemParams::epsilon)
      .def_readwrite("p_m", &SystemParams::p_m)
      .def_readwrite("rate", &SystemParams::rate);

  m.def("false_alarm", &false_alarm, py::arg("params"), py::arg("gamma"));
  m.def("missed_detection", &missed_detection, py::arg("params"), py::arg("gamma"));
  m.def("total_error_at", &total_error_at, py::arg("params"), py::arg("gamma"));
  m.def(
      "min_detection_error",
      [](const SystemParams& p) {
        const auto d = min_detection_error(p);
        std::vector<std::tuple<double, double, bool, bool>> parts;
        for (const auto& part : d.gamma_star.parts()) {
          parts.emplace_back(part.lo(), part.hi(), part.lo_open(), part.hi_open());
        }
        py::dict out;
        out["xi_star"] = d.xi_star;
        out["gamma_star"] = parts;
        out["gamma_rep"] = d.gamma_star.representative();
        out["branch"] = std::string(branch_name(d.branch));
        out["tie"] = d.tie;
        return out;
      },
      py::arg("params"));

  m.def("covertness_ok", &covertness_ok, py::arg("params"), py::arg("rel_slack") = kDefaultSlack);
  m.def("average_power_ok", &average_power_ok, py::arg("params"),
        py::arg("rel_slack") = kDefaultSlack);
  m.def("max_covert_power", &max_covert_power, py::arg("epsilon"), py::arg("p_m"));

  m.def(
      "capacities",
      [](const SystemParams& p) {
        const auto c = capacities(p);
        py::dict out;
        out["c_n"] = c.c_n;
        out["c_j"] = c.c_j;
        out["c_f"] = c.c_f;
        out["c_eps"] = c.c_eps;
        out["c_a"] = c.c_a;
        out["p_r"] = c.p_r;
        return out;
      },
      py::arg("params"));
  m.def("outage", &outage, py::arg("params"));
  m.def("covert_throughput", &covert_throughput, py::arg("params"));

  m.def(
      "optimize_jammer",
      [](double p_a, double rate, double epsilon, double p_m, double sigma_b2) {
        return outcome_dict(optimize_jammer({p_a, rate, epsilon, p_m, sigma_b2}));
      },
      py::arg("p_a"), py::arg("rate"), py::arg("epsilon") = 0.1, py::arg("p_m") = 1.0,
      py::arg("sigma_b2") = 1.0);
  m.def(
      "optimize_alice",
      [](double p_j, double p_min, double p_max, double epsilon, double p_m, double sigma_b2) {
        return outcome_dict(optimize_alice({p_j, p_min, p_max, epsilon, p_m, sigma_b2}));
      },
      py::arg("p_j"), py::arg("p_min"), py::arg("p_max"), py::arg("epsilon") = 0.1,
      py::arg("p_m") = 1.0, py::arg("sigma_b2") = 1.0);
  m.def(
      "optimize_global",
      [](double epsilon, double p_m, double sigma_b2) {
        return solution_dict(optimize_global({epsilon, p_m, sigma_b2}));
      },
      py::arg("epsilon") = 0.1, py::arg("p_m") = 1.0, py::arg("sigma_b2") = 1.0);
  m.def("rho_star", &rho_star, py::arg("epsilon"));
  m.def("rate_switch_margin", &rate_switch_margin, py::arg("epsilon"), py::arg("rho"));

  m.def(
      "simulate_detection",
      [](const SystemParams& p, double gamma, std::uint64_t n, std::uint64_t trials,
         std::uint64_t seed, double mix, unsigned threads) {
        SimReport r;
        {
          py::gil_scoped_release release;
          r = simulate_detection(p, gamma, sim_config(n, trials, seed, mix, threads));
        }
        return report_dict(r);
      },
      py::arg("params"), py::arg("gamma"), py::arg("n") = 100000, py::arg("trials") = 100000,
      py::arg("seed") = 1, py::arg("hypothesis_mix") = 0.5, py::arg("threads") = 0);
  m.def(
      "simulate_outage",
      [](const SystemParams& p, std::uint64_t trials, std::uint64_t seed, unsigned threads) {
        SimReport r;
        {
          py::gil_scoped_release release;
          r = simulate_outage(p, sim_config(100000, trials, seed, 0.5, threads));
        }
        return report_dict(r);
      },
      py::arg("params"), py::arg("trials") = 100000, py::arg("seed") = 1,
      py::arg("threads") = 0);

  // CLI entry point; returns (exit code, stdout, stderr)
  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::vector<const char*> argv{"probjam"};
        for (const auto& a : args) argv.push_back(a.c_str());
        std::ostringstream out, err;
        const int code = app::run(static_cast<int>(argv.size()), argv.data(), out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"));
}
