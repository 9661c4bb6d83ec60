// Acceptance run: one PASS/FAIL line per criterion, non-zero exit on any failure.

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "app/commands.hpp"
#include "probjam/covertness.hpp"
#include "probjam/detection.hpp"
#include "probjam/format.hpp"
#include "probjam/optimize.hpp"
#include "probjam/oracle.hpp"
#include "probjam/rng.hpp"
#include "probjam/simulate.hpp"
#include "probjam/throughput.hpp"

using namespace probjam;

namespace {

struct Verdict {
  bool pass = true;
  std::string detail;
  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

// uniform integer in [lo, hi]
long pick(Rng& r, long lo, long hi) {
  return lo + static_cast<long>(r.uniform01() * static_cast<double>(hi - lo + 1));
}

double rel_diff(double a, double b) {
  return std::abs(a - b) / std::max(std::abs(b), 1e-300);
}

// ---------------------------------------------------------------------------
// 1. closed-form detection error versus a dense threshold grid

// Dyadic parameters (multiples of 1/64, probabilities of 1/1024) keep every sum exact.
std::optional<SystemParams> draw_branch(Rng& r, TableBranch want) {
  const double u = 1.0 / 64.0;
  SystemParams p;
  p.sigma_w2 = pick(r, 8, 256) * u;
  double s = 0, a = 0, l = 0, thr = 0;
  bool low = true;
  switch (want) {
    case TableBranch::kAboveMaxPartial:
    case TableBranch::kAboveMaxContinuous: {
      const double b = pick(r, 1, 512) * u;
      a = pick(r, 0, static_cast<long>(b / u) - 1) * u;
      l = b - a;
      s = b + pick(r, 0, 512) * u;
      p.p_j = want == TableBranch::kAboveMaxContinuous ? 1.0 : pick(r, 0, 1023) / 1024.0;
      p.p_a = s;
      p.p_min = a;
      p.p_max = b;
      return p;
    }
    case TableBranch::kBelowMinSpreadAtom:
    case TableBranch::kBelowMinSpreadSegment:
      s = pick(r, 1, 256) * u;
      a = s + pick(r, 0, 512) * u;
      l = s + pick(r, 0, 512) * u;
      thr = l / (l + s);
      low = want == TableBranch::kBelowMinSpreadAtom;
      break;
    case TableBranch::kInsideSpreadEdge:
    case TableBranch::kInsideSpreadSegment:
      a = pick(r, 0, 256) * u;
      s = a + pick(r, 1, 256) * u;
      l = s + pick(r, 0, 512) * u;
      thr = l / (a + l);
      low = want == TableBranch::kInsideSpreadEdge;
      break;
    case TableBranch::kBelowMinAtom:
    case TableBranch::kBelowMinCover:
      l = pick(r, 1, 256) * u;
      s = l + pick(r, 1, 256) * u;
      a = s + pick(r, 0, 512) * u;
      thr = 0.5;
      low = want == TableBranch::kBelowMinAtom;
      break;
    case TableBranch::kAboveBothEdge:
    case TableBranch::kAboveBothCover: {
      a = pick(r, 1, 256) * u;
      l = pick(r, 1, 256) * u;
      const double m = std::max(a, l);
      const long room = static_cast<long>((a + l - m) / u) - 1;  // s strictly inside (m, b)
      if (room < 1) return std::nullopt;
      s = m + pick(r, 1, room) * u;
      thr = l / (l + a + l - s);
      low = want == TableBranch::kAboveBothEdge;
      break;
    }
  }
  const long cut = static_cast<long>(std::floor(thr * 1024.0));
  long k = 0;
  if (low) {
    k = pick(r, 0, cut);
  } else {
    if (cut >= 1024) return std::nullopt;
    k = pick(r, cut + 1, 1024);
  }
  p.p_j = k / 1024.0;
  if (low && p.p_j > thr) return std::nullopt;
  if (!low && !(p.p_j > thr)) return std::nullopt;
  p.p_a = s;
  p.p_min = a;
  p.p_max = a + l;
  return p;
}

Verdict criterion_table(std::string& info) {
  Verdict v;
  Rng r(101);
  std::array<int, kTableBranchCount> count{};
  int ties = 0;
  double worst_grid = 0.0, worst_sample = 0.0;
  for (int b = 0; b < kTableBranchCount; ++b) {
    const auto want = static_cast<TableBranch>(b);
    int made = 0;
    while (made < 1000) {
      const auto drawn = draw_branch(r, want);
      if (!drawn) continue;
      const SystemParams& p = *drawn;
      const auto res = min_detection_error(p);
      if (res.branch != want) {
        v.fail(std::string("branch mismatch for ") + std::string(branch_name(want)));
        continue;
      }
      ++made;
      ++count[b];
      ties += res.tie;
      const auto brute = brute_force_xi(p, 20001);
      worst_grid = std::max(worst_grid, std::abs(brute.xi - res.xi_star));
      for (double g : res.gamma_star.sample(5)) {
        worst_sample = std::max(worst_sample, std::abs(total_error_at(p, g) - res.xi_star));
      }
    }
  }
  int total = 0;
  for (int c : count) {
    total += c;
    if (c < 500) v.fail("a branch has fewer than 500 draws");
  }
  if (worst_grid > 1e-6) v.fail("grid gap " + format_double(worst_grid));
  if (worst_sample > 1e-12) v.fail("gamma* sample gap " + format_double(worst_sample));
  info = std::to_string(total) + " draws, 1000 per branch, " + std::to_string(ties) +
         " ties; max |xi*-grid| " + format_double(worst_grid) + ", max gamma* gap " +
         format_double(worst_sample);
  return v;
}

// ---------------------------------------------------------------------------
// 2. covertness inequalities versus the detector

Verdict criterion_corollary(std::string& info) {
  Verdict v;
  Rng r(202);
  int mismatches = 0, covert = 0;
  const int n = 100000;
  for (int i = 0; i < n; ++i) {
    SystemParams p;
    p.epsilon = 0.01 + 0.48 * r.uniform01();
    p.sigma_w2 = 0.1 + 5.0 * r.uniform01();
    p.p_max = 0.05 + 20.0 * r.uniform01();
    p.p_min = p.p_max * r.uniform01();
    p.p_j = std::min(1.0, 1.0 - 2.0 * p.epsilon * r.uniform01() + 0.2 * r.uniform01());
    p.p_a = 0.001 + 2.0 * p.epsilon * p.p_max * r.uniform01();
    const bool ok = covertness_ok(p, 0.0);
    const bool truth = min_detection_error(p).xi_star >= 1.0 - p.epsilon;
    mismatches += ok != truth;
    covert += truth;
  }
  if (mismatches) v.fail(std::to_string(mismatches) + " mismatches");
  if (covert < n / 10 || covert > n - n / 10) v.fail("draws do not straddle the boundary");
  info = std::to_string(n) + " draws (" + std::to_string(covert) + " covert), " +
         std::to_string(mismatches) + " mismatches";
  return v;
}

// ---------------------------------------------------------------------------
// 3. the better endpoint rate is optimal; the middle branch is convex

Verdict criterion_best_rate(std::string& info) {
  Verdict v;
  Rng r(303);
  double worst_excess = -1.0, worst_chord = -1.0;
  for (int i = 0; i < 1000; ++i) {
    SystemParams p;
    p.sigma_b2 = 0.1 + 5.0 * r.uniform01();
    p.p_max = 0.05 + 30.0 * r.uniform01();
    p.p_min = p.p_max * r.uniform01();
    p.p_j = r.uniform01();
    p.p_a = 0.01 + 30.0 * r.uniform01();
    const auto best = best_rate(p);
    const auto c = capacities(p);
    auto omega_at = [&](double rate) {
      SystemParams q = p;
      q.rate = rate;
      return covert_throughput(q);
    };
    std::vector<double> grid{c.c_n, c.c_j, c.c_f};
    for (int k = 0; k <= 5000; ++k) grid.push_back(1.05 * c.c_f * k / 5000.0);
    for (double rate : grid) worst_excess = std::max(worst_excess, omega_at(rate) - best.omega);
    for (int k = 0; k < 50; ++k) {
      const double x = c.c_n + (c.c_j - c.c_n) * r.uniform01();
      const double y = c.c_n + (c.c_j - c.c_n) * r.uniform01();
      const double t = r.uniform01();
      const double mid = omega_at(t * x + (1.0 - t) * y);
      const double chord = t * omega_at(x) + (1.0 - t) * omega_at(y);
      worst_chord = std::max(worst_chord, mid - chord);
    }
  }
  if (worst_excess > 1e-9) v.fail("grid beats the endpoints by " + format_double(worst_excess));
  if (worst_chord > 1e-12) v.fail("chord violated by " + format_double(worst_chord));
  info = "1000 draws; max grid excess " + format_double(worst_excess) + ", max chord excess " +
         format_double(worst_chord);
  return v;
}

// ---------------------------------------------------------------------------
// 4. jammer-side optimum

Verdict criterion_jammer(std::string& info) {
  Verdict v;
  Rng r(404);
  double worst_gap = -1.0, worst_formula = 0.0, worst_flat = 0.0;
  int oracle_empty = 0;
  const char* labels[] = {"case1:all-optimal", "case2", "case3", "case4"};
  for (int which = 0; which < 4; ++which) {
    for (int i = 0; i < 250; ++i) {
      JammerProblem jp;
      jp.epsilon = 0.05 + 0.4 * r.uniform01();
      jp.p_m = 0.2 + 5.0 * r.uniform01();
      jp.sigma_b2 = 0.2 + 3.0 * r.uniform01();
      // above ~0.97 of the cap the feasible set is too thin for a 30-point grid to hit
      jp.p_a = (0.05 + 0.9 * r.uniform01()) * max_covert_power(jp.epsilon, jp.p_m);
      const double s = jp.p_a, eps = jp.epsilon, sb = jp.sigma_b2;
      const double c_eps = std::log2(1.0 + eps * s / (eps * sb + s));
      const double c_a = std::log2(1.0 + s / (sb + s));
      const double c_f = std::log2(1.0 + s / sb);
      const double u = 0.001 + 0.998 * r.uniform01();
      switch (which) {
        case 0: jp.rate = u * c_eps; break;
        case 1: jp.rate = c_eps + (c_a - c_eps) * u; break;
        case 2: jp.rate = c_a; break;
        default: jp.rate = c_a + (c_f - c_a) * u; break;
      }
      const auto out = optimize_jammer(jp);
      if (!is_feasible(out)) {
        v.fail("unexpected infeasible instance");
        continue;
      }
      const auto& sol = std::get<DesignSolution>(out);
      if (sol.case_label() != labels[which]) v.fail("case label " + sol.case_label());

      double expected = 0.0;
      if (which == 0) {
        expected = jp.rate;
      } else if (which == 1) {
        const double p_r = s / (std::pow(2.0, jp.rate) - 1.0) - sb;
        expected = eps * jp.rate * p_r / s;
      } else {
        expected = eps * jp.rate;
      }
      worst_formula = std::max(worst_formula, rel_diff(sol.omega_star(), expected));

      const auto pt = sol.representative();
      const auto params = sol.params_at(pt);
      if (!covertness_ok(params) || !average_power_ok(params)) v.fail("representative infeasible");
      if (rel_diff(covert_throughput(params), sol.omega_star()) > 1e-9) {
        v.fail("representative does not attain omega*");
      }

      const auto ver = verify_jammer(jp, sol);
      if (!ver.found_feasible) ++oracle_empty;
      if (ver.found_feasible) worst_gap = std::max(worst_gap, ver.gap);

      if (which == 1) {
        const double lambda0 = outage(params);
        for (double pj : sol.box()[2].bounds(pt).sample(20)) {
          DesignPoint q = pt;
          q["p_j"] = pj;
          q["p_max"] = sol.box()[3].bounds(q).lo();
          q["p_min"] = sol.box()[4].bounds(q).lo();
          worst_flat = std::max(worst_flat, std::abs(outage(sol.params_at(q)) - lambda0));
        }
      }
    }
  }
  if (worst_formula > 1e-12) v.fail("omega* off the closed form by " + format_double(worst_formula));
  if (worst_gap > 1e-3) v.fail("oracle better by " + format_double(worst_gap));
  if (oracle_empty) v.fail("oracle grid hit no feasible cell in some instances");
  if (worst_flat > 1e-12) v.fail("case-2 outage varies by " + format_double(worst_flat));
  info = "1000 instances (250 per case); max omega* formula rel diff " +
         format_double(worst_formula) + ", max oracle gap " + format_double(worst_gap) +
         " (oracle found no feasible cell in " + std::to_string(oracle_empty) +
         "), case-2 outage spread " + format_double(worst_flat);
  return v;
}

// ---------------------------------------------------------------------------
// 5. Alice-side optimum

Verdict criterion_alice(std::string& info) {
  Verdict v;
  Rng r(505);
  double worst_pau = 0.0, worst_gap = -1.0;
  int cf = 0;
  for (int i = 0; i < 1000; ++i) {
    AliceProblem ap;
    ap.epsilon = 0.05 + 0.4 * r.uniform01();
    ap.p_j = i % 10 == 0 ? 1.0 - ap.epsilon : 1.0 - ap.epsilon * r.uniform01();
    ap.p_max = 0.1 + 50.0 * r.uniform01();
    ap.p_min = ap.p_max * (i % 10 == 0 ? 0.01 + 0.98 * r.uniform01() : r.uniform01());
    ap.p_m = 0.5 * ap.p_j * (ap.p_min + ap.p_max) * (1.0 + r.uniform01());
    ap.sigma_b2 = 0.1 + 3.0 * r.uniform01();
    const auto out = optimize_alice(ap);
    if (!is_feasible(out)) {
      v.fail("feasible configuration rejected: " + std::get<Infeasible>(out).detail);
      continue;
    }
    const auto& sol = std::get<DesignSolution>(out);
    const auto pt = sol.representative();
    const double pau = pt.at("p_a");
    const double bis = bisect_max_covert_power(ap);
    worst_pau = std::max(worst_pau, std::abs(pau - bis) / std::max(1.0, bis));

    const double omega_f = (1.0 - ap.p_j) * std::log2(1.0 + pau / ap.sigma_b2);
    const double omega_n = std::log2(1.0 + pau / (ap.sigma_b2 + ap.p_max));
    const bool want_cf = omega_f >= omega_n;
    cf += want_cf;
    const double want_rate =
        want_cf ? std::log2(1.0 + pau / ap.sigma_b2) : std::log2(1.0 + pau / (ap.sigma_b2 + ap.p_max));
    if (rel_diff(pt.at("rate"), want_rate) > 1e-12) v.fail("rate choice disagrees");
    if (rel_diff(sol.omega_star(), std::max(omega_f, omega_n)) > 1e-12) v.fail("omega* disagrees");
    const auto ver = verify_alice(ap, sol);
    if (ver.found_feasible) worst_gap = std::max(worst_gap, ver.gap);
  }
  if (worst_pau > 1e-9) v.fail("P_au off bisection by " + format_double(worst_pau));
  if (worst_gap > 1e-3) v.fail("grid oracle better by " + format_double(worst_gap));
  info = "1000 configurations (" + std::to_string(cf) + " pick C_f); max |P_au-bisection| " +
         format_double(worst_pau) + ", max grid gap " + format_double(worst_gap);
  return v;
}

// ---------------------------------------------------------------------------
// 6. joint optimum and the rate switch point

Verdict criterion_global(std::string& info) {
  Verdict v;
  double worst_gap = -1.0;
  for (double eps : {0.05, 0.1, 0.2, 0.3, 0.4}) {
    for (double rho : {0.1, 1.0, 10.0, 100.0}) {
      const GlobalProblem gp{eps, rho, 1.0};
      const auto sol = optimize_global(gp);
      const auto ver = verify_global(gp, sol);
      if (!ver.found_feasible) v.fail("4-D oracle found nothing feasible");
      worst_gap = std::max(worst_gap, ver.gap);
      const auto p = sol.params_at(sol.representative());
      if (!covertness_ok(p) || !average_power_ok(p)) v.fail("global design infeasible");
    }
    const double rs = rho_star(eps);
    for (double side : {-1.0, 1.0}) {
      const auto sol = optimize_global({eps, rs * (1.0 + side * 1e-3), 1.0});
      const bool is_cf = sol.case_label() == "global:rate=Cf";
      if (is_cf != (side > 0)) v.fail("rate choice does not flip at rho* for eps " + format_double(eps));
    }
  }
  // independent bisection on l(rho) for eps = 0.2
  auto l = [](double rho) {
    const double e = 0.2, k = 1.0 - e * e;
    return e * std::log(1.0 + 2.0 * e * rho / k) - std::log(1.0 + 2.0 * e * rho / (k + 2.0 * rho));
  };
  double lo = 1.0, hi = 10.0;
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    (l(mid) < 0.0 ? lo : hi) = mid;
  }
  const double rs = rho_star(0.2);
  const double residual = std::abs(rate_switch_margin(0.2, rs));
  if (residual >= 1e-9) v.fail("|l(rho*)| = " + format_double(residual));
  if (std::abs(rs - lo) > 1e-9) v.fail("rho* disagrees with an independent bisection");
  info = "20 (eps, P_m/sigma_b2) pairs; max oracle gap " + format_double(worst_gap) +
         "; rho*(0.2) = " + format_double(rs) + ", |l(rho*)| = " + format_double(residual);
  if (worst_gap > 1e-3) v.fail("oracle better by " + format_double(worst_gap));
  return v;
}

// ---------------------------------------------------------------------------
// 7. sweep shapes

std::vector<std::vector<app::Cell>> sweep_rows(const std::vector<std::string>& sets,
                                               app::SweepAxis axis) {
  app::Config cfg;
  for (const auto& s : sets) cfg.apply_override(s);
  return app::cmd_sweep(cfg, axis).rows;
}

double num(const app::Cell& c) { return std::get<double>(c); }

Verdict criterion_sweeps(std::string& info) {
  Verdict v;
  int rows = 0;
  for (const char* rho : {"pm_over_sigma=1", "pm_over_sigma=10", "pm_over_sigma=100"}) {
    for (const auto& row : sweep_rows({rho, "start=0.05", "stop=0.45", "step=0.05"},
                                      app::SweepAxis::kEpsilon)) {
      ++rows;
      if (num(row[1]) < num(row[2])) v.fail("omega_p < omega_c on an epsilon sweep");
    }
  }
  std::string growth;
  for (const char* eps : {"epsilon=0.05", "epsilon=0.2", "epsilon=0.4"}) {
    const auto table = sweep_rows({eps, "start_db=-10", "stop_db=30", "step_db=1"},
                                  app::SweepAxis::kPmOverSigma);
    for (const auto& row : table) {
      ++rows;
      if (num(row[1]) < num(row[2])) v.fail("omega_p < omega_c on a P_m sweep");
    }
    const auto& at20 = table[30];
    const auto& at30 = table[40];
    if (num(at20[0]) != 20.0 || num(at30[0]) != 30.0) v.fail("sweep grid misaligned");
    const double c20 = num(at20[2]), c30 = num(at30[2]);
    const double p20 = num(at20[1]), p30 = num(at30[1]);
    if (!(c30 - c20 < 0.01 * c20)) v.fail("omega_c does not saturate");
    if (!(p30 > 1.05 * p20)) v.fail("omega_p does not keep growing");
    growth += std::string(" ") + eps + ": omega_c +" + format_double((c30 - c20) / c20 * 100) +
              "%, omega_p +" + format_double((p30 - p20) / p20 * 100) + "%;";
  }
  info = std::to_string(rows) + " sweep rows;" + growth;
  return v;
}

// ---------------------------------------------------------------------------
// 8. Monte Carlo agreement

Verdict criterion_monte_carlo(std::string& info) {
  Verdict v;
  SimConfig cfg;
  cfg.n = 100000;
  cfg.trials = 100000;
  cfg.seed = 20240601;
  struct Case {
    double w, s, a, b, p;
  };
  const Case det[] = {
      {1.0, 1.0, 2.0, 5.0, 0.8},  // spread, segment
      {1.0, 1.0, 2.0, 5.0, 0.5},  // spread, atom window
      {1.0, 2.0, 1.0, 6.0, 0.9},  // inside, segment
      {1.0, 2.0, 3.0, 4.0, 0.7},  // narrow spread, cover
      {1.0, 3.0, 2.0, 4.0, 0.9},  // above both, cover
  };
  double worst = 0.0;
  for (const auto& c : det) {
    SystemParams p;
    p.sigma_w2 = c.w;
    p.p_a = c.s;
    p.p_min = c.a;
    p.p_max = c.b;
    p.p_j = c.p;
    const auto d = min_detection_error(p);
    const auto rep = simulate_detection(p, d.gamma_star.representative(), cfg);
    const double z = std::abs(rep.xi->value - d.xi_star) / rep.xi->std_error;
    worst = std::max(worst, z);
    if (!(z < 3.0)) v.fail(std::string("detection off by ") + format_double(z) + " s.e. in " +
                           std::string(branch_name(d.branch)));
  }
  struct Link {
    double s, a, b, p, t;  // rate = C_n + t (C_f - C_n) style mix, see below
    bool plateau;
  };
  const Link links[] = {
      {1.0, 1.0, 3.0, 0.8, -1.0, false},  // rate 0.5
      {4.0, 0.5, 6.0, 0.9, 0.5, false},
      {10.0, 2.0, 20.0, 0.85, 0.6, false},
      {1.0, 1.0, 3.0, 0.8, 0.5, true},
      {2.0, 0.5, 2.0, 0.6, 0.9, true},
  };
  double worst_l = 0.0;
  for (const auto& l : links) {
    SystemParams p;
    p.p_a = l.s;
    p.p_min = l.a;
    p.p_max = l.b;
    p.p_j = l.p;
    const auto c = capacities(p);
    if (l.t < 0.0) {
      p.rate = 0.5;
    } else if (!l.plateau) {
      p.rate = c.c_n + l.t * (c.c_j - c.c_n);
    } else {
      p.rate = c.c_j + l.t * (c.c_f - c.c_j);
    }
    const auto rep = simulate_outage(p, cfg);
    const double z = std::abs(rep.lambda->value - outage(p)) / rep.lambda->std_error;
    worst_l = std::max(worst_l, z);
    if (!(z < 3.0)) v.fail("outage off by " + format_double(z) + " s.e.");
  }
  info = "N = 1e5, 1e5 trials, seed 20240601; worst detection |z| " + format_double(worst) +
         ", worst outage |z| " + format_double(worst_l);
  return v;
}

// ---------------------------------------------------------------------------
// 9. byte-identical CLI output

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Verdict criterion_determinism(std::string& info) {
  Verdict v;
  const std::string cli = PROBJAM_CLI_PATH;
  const std::string sim_args =
      " simulate -s p_a=1 -s p_min=2 -s p_max=5 -s p_j=0.8 -s rate=0.2 -s trials=50000 -s seed=9";
  const std::string sweep_args =
      " sweep --axis pm_over_sigma -s epsilon=0.2 -s start_db=-10 -s stop_db=30 -s step_db=0.5";
  int compared = 0;
  for (const auto& [name, args] : {std::pair{"simulate", sim_args}, std::pair{"sweep", sweep_args}}) {
    for (const char* fmt : {"csv", "json"}) {
      std::string outputs[2];
      for (int k = 0; k < 2; ++k) {
        const std::string path = std::string("acceptance_") + name + "_" + fmt + std::to_string(k);
        const std::string cmd = cli + args + " -f " + fmt + " -o " + path;
        if (std::system(cmd.c_str()) != 0) v.fail(std::string(name) + " run failed");
        outputs[k] = slurp(path);
        std::remove(path.c_str());
      }
      if (outputs[0].empty()) v.fail(std::string(name) + " produced no output");
      if (outputs[0] != outputs[1]) v.fail(std::string(name) + " output differs between runs");
      ++compared;
    }
  }
  info = std::to_string(compared) + " pairs of runs compared byte for byte";
  return v;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    std::function<Verdict(std::string&)> run;
  };
  const Criterion all[] = {
      {1, "optimal-threshold table vs dense grid", criterion_table},
      {2, "covertness inequalities vs detector", criterion_corollary},
      {3, "endpoint rate optimality and convexity", criterion_best_rate},
      {4, "jammer-side optimum", criterion_jammer},
      {5, "Alice-side optimum", criterion_alice},
      {6, "joint optimum and rate switch", criterion_global},
      {7, "sweep dominance and saturation", criterion_sweeps},
      {8, "Monte Carlo agreement", criterion_monte_carlo},
      {9, "determinism of simulate and sweep", criterion_determinism},
  };
  int failures = 0;
  for (const auto& c : all) {
    std::string info;
    const auto t0 = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = c.run(info);
    } catch (const std::exception& e) {
      v.fail(std::string("exception: ") + e.what());
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.2fs", secs);
    std::cout << "criterion " << c.id << " " << (v.pass ? "PASS" : "FAIL") << " " << c.name
              << " [" << timing << "] " << info;
    if (!v.pass) std::cout << " -- " << v.detail;
    std::cout << std::endl;
    failures += !v.pass;
  }
  std::cout << (failures ? "acceptance: FAILED" : "acceptance: all criteria passed") << std::endl;
  return failures ? 1 : 0;
}
