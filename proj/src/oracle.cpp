#include "probjam/oracle.hpp"

#include <algorithm>
#include <utility>
#include <vector>

#include "probjam/detection.hpp"
#include "probjam/throughput.hpp"

namespace probjam {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double relative_gap(double oracle, double closed) {
  if (closed == 0.0) return oracle;
  return (oracle - closed) / std::abs(closed);
}

bool admissible(const SystemParams& p) {
  return p.p_a > 0.0 && p.p_min >= 0.0 && p.p_max > p.p_min && covertness_ok(p) &&
         average_power_ok(p);
}

// P_min window left open by covertness and the power budget once p_j and P_max are fixed.
std::pair<double, double> min_power_window(double p_j, double p_max, double p_a, double eps,
                                           double p_m) {
  const double lo = p_j / (1.0 - eps) * p_a - (p_j / (1.0 - eps) - 1.0) * p_max;
  const double hi = std::min(p_max - p_j / eps * p_a, 2.0 * p_m / p_j - p_max);
  return {std::max(0.0, lo), hi};
}

}  // namespace

BruteForceXi brute_force_xi(const SystemParams& params, std::size_t grid_points) {
  const double w = params.sigma_w2;
  const double s = params.p_a;
  const double a = params.p_min;
  const double b = params.p_max;

  std::vector<double> gammas;
  gammas.reserve(grid_points + 18);
  const double lo = w;
  const double hi = w + b + s;
  for (std::size_t k = 0; k < grid_points; ++k) {
    gammas.push_back(lo + (hi - lo) * static_cast<double>(k) / static_cast<double>(grid_points - 1));
  }
  const double tiny = 1e-9 * hi;
  for (double kink : {w, w + a, w + b, w + s, w + a + s, w + b + s}) {
    gammas.push_back(kink);
    gammas.push_back(kink - tiny);
    gammas.push_back(kink + tiny);
  }

  BruteForceXi best{kInf, 0.0};
  for (double g : gammas) {
    const double v = total_error_at(params, g);
    if (v < best.xi || (v == best.xi && g < best.gamma)) best = {v, g};
  }
  return best;
}

Verification verify_jammer(const JammerProblem& problem, const DesignSolution& solution,
                           const GridSpec& spec) {
  const double eps = problem.epsilon;
  SystemParams base;
  base.p_a = problem.p_a;
  base.rate = problem.rate;
  base.epsilon = eps;
  base.p_m = problem.p_m;
  base.sigma_b2 = problem.sigma_b2;

  auto objective = [&](const std::array<double, 3>& x) {
    SystemParams p = base;
    p.p_j = x[0];
    p.p_max = x[1];
    // the third coordinate sweeps the admissible P_min window, which can be very thin
    const auto [lo, hi] = min_power_window(x[0], x[1], problem.p_a, eps, problem.p_m);
    if (!(lo <= hi)) return kInf;
    p.p_min = lo + x[2] * (hi - lo);
    if (!admissible(p)) return kInf;
    return outage(p);
  };
  const auto best = refined_grid_minimize<3>(
      objective, {1.0 - eps, problem.p_a, 0.0}, {1.0, 2.0 / (1.0 - eps) * problem.p_m, 1.0},
      spec);

  Verification v;
  v.closed_form = solution.omega_star();
  v.evaluations = best.evaluations;
  v.found_feasible = best.value < kInf;
  if (v.found_feasible) {
    v.oracle = problem.rate * (1.0 - best.value);
    v.oracle_point = {{"p_a", problem.p_a},
                      {"rate", problem.rate},
                      {"p_j", best.point[0]},
                      {"p_max", best.point[1]}};
    const auto [lo, hi] = min_power_window(best.point[0], best.point[1], problem.p_a, eps,
                                           problem.p_m);
    v.oracle_point["p_min"] = lo + best.point[2] * (hi - lo);
  }
  v.gap = v.found_feasible ? relative_gap(v.oracle, v.closed_form) : -kInf;
  return v;
}

Verification verify_alice(const AliceProblem& problem, const DesignSolution& solution,
                          const GridSpec& spec) {
  SystemParams base;
  base.p_j = problem.p_j;
  base.p_min = problem.p_min;
  base.p_max = problem.p_max;
  base.epsilon = problem.epsilon;
  base.p_m = problem.p_m;
  base.sigma_b2 = problem.sigma_b2;
  const double pa_hi = problem.epsilon / problem.p_j * (problem.p_max - problem.p_min);

  auto objective = [&](const std::array<double, 2>& x) {
    SystemParams p = base;
    p.p_a = x[0];
    if (!(p.p_a > 0.0) || !covertness_ok(p)) return kInf;
    p.rate = x[1] * std::log2(1.0 + p.p_a / p.sigma_b2);
    return -covert_throughput(p);
  };
  const auto best = refined_grid_minimize<2>(objective, {0.0, 0.0}, {pa_hi, 1.0}, spec);

  Verification v;
  v.closed_form = solution.omega_star();
  v.evaluations = best.evaluations;
  v.found_feasible = best.value < kInf;
  if (v.found_feasible) {
    v.oracle = -best.value;
    v.oracle_point = {{"p_j", problem.p_j},
                      {"p_min", problem.p_min},
                      {"p_max", problem.p_max},
                      {"p_a", best.point[0]},
                      {"rate", best.point[1] * std::log2(1.0 + best.point[0] / problem.sigma_b2)}};
  }
  v.gap = v.found_feasible ? relative_gap(v.oracle, v.closed_form) : -kInf;
  return v;
}

Verification verify_global(const GlobalProblem& problem, const DesignSolution& solution,
                           const GridSpec& spec) {
  const double eps = problem.epsilon;
  const double pa_cap = max_covert_power(eps, problem.p_m);
  SystemParams base;
  base.epsilon = eps;
  base.p_m = problem.p_m;
  base.sigma_b2 = problem.sigma_b2;

  auto objective = [&](const std::array<double, 4>& x) {
    SystemParams p = base;
    p.p_j = x[0];
    p.p_max = x[1];
    p.p_min = x[2] * x[1];
    p.p_a = x[3] * pa_cap;
    if (!admissible(p)) return kInf;
    return -best_rate(p).omega;
  };
  const auto best = refined_grid_minimize<4>(
      objective, {1.0 - eps, 0.0, 0.0, 0.0}, {1.0, 2.0 / (1.0 - eps) * problem.p_m, 1.0, 1.0},
      spec);

  Verification v;
  v.closed_form = solution.omega_star();
  v.evaluations = best.evaluations;
  v.found_feasible = best.value < kInf;
  if (v.found_feasible) {
    v.oracle = -best.value;
    SystemParams p = base;
    p.p_j = best.point[0];
    p.p_max = best.point[1];
    p.p_min = best.point[2] * best.point[1];
    p.p_a = best.point[3] * pa_cap;
    v.oracle_point = {{"p_j", p.p_j},
                      {"p_min", p.p_min},
                      {"p_max", p.p_max},
                      {"p_a", p.p_a},
                      {"rate", best_rate(p).rate}};
  }
  v.gap = v.found_feasible ? relative_gap(v.oracle, v.closed_form) : -kInf;
  return v;
}

double bisect_max_covert_power(const AliceProblem& problem, double rel_tol) {
  SystemParams p;
  p.p_j = problem.p_j;
  p.p_min = problem.p_min;
  p.p_max = problem.p_max;
  p.epsilon = problem.epsilon;
  p.p_m = problem.p_m;
  p.sigma_b2 = problem.sigma_b2;
  auto passes = [&](double pa) {
    p.p_a = pa;
    return covertness_ok(p, 0.0);
  };
  double lo = 0.0;
  double hi = std::max(1.0, problem.p_max);
  while (passes(hi)) hi *= 2.0;
  for (int i = 0; i < 2000 && hi - lo > rel_tol * hi; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    (passes(mid) ? lo : hi) = mid;
  }
  return lo;
}

}  // namespace probjam
