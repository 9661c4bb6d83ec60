#include "probjam/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "probjam/throughput.hpp"

namespace probjam {

namespace {

constexpr double kRateMatchTolerance = 1e-12;

Interval range(double lo, double hi) {
  return Interval::tolerant(lo, hi).value_or(Interval::point(lo));
}

BoxCoordinate constant(std::string name, double value) {
  return {std::move(name), [value](const DesignPoint&) { return Interval::point(value); }, {}};
}

double at(const DesignPoint& point, const char* key) { return point.at(key); }

void check_global(const GlobalProblem& problem) {
  if (!(problem.epsilon > 0.0 && problem.epsilon < 0.5)) {
    throw InvalidParameter("epsilon", "epsilon: must lie in (0, 1/2)");
  }
  if (!(problem.p_m > 0.0 && std::isfinite(problem.p_m))) {
    throw InvalidParameter("p_m", "p_m: must be > 0");
  }
  if (!(problem.sigma_b2 > 0.0 && std::isfinite(problem.sigma_b2))) {
    throw InvalidParameter("sigma_b2", "sigma_b2: must be > 0");
  }
}

}  // namespace

Outcome<DesignSolution> optimize_jammer(const JammerProblem& problem) {
  auto region_or = jammer_feasible_region(problem);
  if (auto* infeasible = std::get_if<Infeasible>(&region_or)) return *infeasible;
  const FeasibleRegion region = std::get<FeasibleRegion>(region_or);

  const double s = problem.p_a;
  const double eps = problem.epsilon;
  const double pm = problem.p_m;
  const double r = problem.rate;
  SystemParams probe;
  probe.p_a = s;
  probe.p_min = 0.0;
  probe.p_max = 1.0;
  probe.sigma_b2 = problem.sigma_b2;
  probe.epsilon = eps;
  probe.rate = r;
  const Capacities caps = capacities(probe);
  const double p_r = caps.p_r;

  std::vector<BoxCoordinate> box{constant("p_a", s), constant("rate", r)};
  const Interval pj = region.pj_range();
  auto pj_coord = BoxCoordinate{"p_j", [pj](const DesignPoint&) { return pj; },
                                "1-eps <= p_j <= p_ju"};

  std::string label;
  double omega = 0.0;
  if (r <= caps.c_eps) {
    label = "case1:all-optimal";
    omega = r;
    box.push_back(pj_coord);
    box.push_back({"p_max",
                   [region, p_r](const DesignPoint& pt) {
                     const double p = at(pt, "p_j");
                     const auto& pr = region.problem();
                     const double hi =
                         std::min({region.l1_l3_pmax(p), 2.0 / p * pr.p_m, p_r});
                     return range(pr.p_a / pr.epsilon, hi);
                   },
                   "p_a/eps <= p_max <= min(P3_x(p_j), 2 p_m/p_j, P_r)"});
    box.push_back({"p_min",
                   [region](const DesignPoint& pt) {
                     const double p = at(pt, "p_j");
                     const double b = at(pt, "p_max");
                     return region.pmin_bounds(p, b).value_or(Interval::point(0.0));
                   },
                   "max(0, l1(p_max)) <= p_min <= min(p_max - p_j p_a/eps, 2 p_m/p_j - p_max)"});
  } else if (r < caps.c_a * (1.0 - kRateMatchTolerance)) {
    label = "case2";
    omega = eps * r * p_r / s;
    box.push_back(pj_coord);
    box.push_back(constant("p_max", s / eps));
    box.back().constraint = "p_max = p_a/eps";
    box.push_back({"p_min",
                   [s, eps](const DesignPoint& pt) {
                     return Interval::point((1.0 - at(pt, "p_j")) / eps * s);
                   },
                   "p_min = (1 - p_j) p_a/eps"});
  } else if (r <= caps.c_a * (1.0 + kRateMatchTolerance)) {
    label = "case3";
    omega = eps * r;
    box.push_back(pj_coord);
    box.push_back({"p_max",
                   [region, s, eps](const DesignPoint& pt) {
                     const double p = at(pt, "p_j");
                     double hi = region.l1_l3_pmax(p);
                     if (p + eps - 1.0 > 0.0) hi = std::min(hi, p / (p + eps - 1.0) * s);
                     return range(s / eps, hi);
                   },
                   "p_a/eps <= p_max <= min(P3_x(p_j), p_j p_a/(p_j + eps - 1))"});
    box.push_back({"p_min",
                   [region](const DesignPoint& pt) {
                     return Interval::point(region.l1_pmin(at(pt, "p_j"), at(pt, "p_max")));
                   },
                   "p_min on l1"});
  } else {
    label = "case4";
    omega = eps * r;
    box.push_back(constant("p_j", 1.0 - eps));
    box.push_back({"p_min",
                   [s, eps, pm](const DesignPoint&) {
                     return range(s, pm / (1.0 - eps) - (1.0 - eps) / (2.0 * eps) * s);
                   },
                   "p_a <= p_min <= p_m/(1-eps) - (1-eps) p_a/(2 eps)"});
    box.push_back({"p_max",
                   [s, eps, pm](const DesignPoint& pt) {
                     const double a = at(pt, "p_min");
                     return range((1.0 - eps) / eps * s + a, 2.0 / (1.0 - eps) * pm - a);
                   },
                   "(1-eps) p_a/eps + p_min <= p_max <= 2 p_m/(1-eps) - p_min"});
  }
  return DesignSolution(std::move(box), omega, std::move(label), eps, pm, problem.sigma_b2);
}

Outcome<DesignSolution> optimize_alice(const AliceProblem& problem) {
  auto bounds_or = alice_feasible_region(problem);
  if (auto* infeasible = std::get_if<Infeasible>(&bounds_or)) return *infeasible;
  const AliceBounds bounds = std::get<AliceBounds>(bounds_or);

  const double c_n = std::log2(1.0 + bounds.p_au / (problem.sigma_b2 + problem.p_max));
  const double omega_n = c_n;
  const double omega_f = (1.0 - problem.p_j) * bounds.c_f;
  const bool use_cf = omega_f >= omega_n;

  std::string label = use_cf ? "rate=Cf" : "rate=Cn";
  label += bounds.branch == PauBranch::kLineOne ? ";pau=line_one" : ";pau=spread";

  std::vector<BoxCoordinate> box{
      constant("p_j", problem.p_j),
      constant("p_min", problem.p_min),
      constant("p_max", problem.p_max),
      constant("p_a", bounds.p_au),
      constant("rate", use_cf ? bounds.c_f : c_n),
  };
  return DesignSolution(std::move(box), use_cf ? omega_f : omega_n, std::move(label),
                        problem.epsilon, problem.p_m, problem.sigma_b2);
}

double rate_switch_margin(double epsilon, double rho) {
  const double k = 1.0 - epsilon * epsilon;
  return epsilon * std::log1p(2.0 * epsilon * rho / k) -
         std::log1p(2.0 * epsilon * rho / (k + 2.0 * rho));
}

double rate_switch_turning_point(double epsilon) {
  return 0.25 * (1.0 - epsilon * epsilon) * (std::sqrt(1.0 + 4.0 / epsilon) - 1.0);
}

double rho_star(double epsilon) {
  if (!(epsilon > 0.0 && epsilon < 0.5)) {
    throw InvalidParameter("epsilon", "epsilon: must lie in (0, 1/2)");
  }
  double lo = rate_switch_turning_point(epsilon);
  double hi = lo;
  while (rate_switch_margin(epsilon, hi) <= 0.0) hi *= 2.0;
  while (hi - lo > 1e-10) {
    const double mid = 0.5 * (lo + hi);
    if (rate_switch_margin(epsilon, mid) < 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

DesignSolution optimize_global(const GlobalProblem& problem) {
  check_global(problem);
  const double eps = problem.epsilon;
  const double k = 1.0 - eps * eps;
  const double p_a = 2.0 * eps / k * problem.p_m;
  const double p_max = 2.0 / k * problem.p_m;

  const double c_f = std::log2(1.0 + p_a / problem.sigma_b2);
  const double c_n = std::log2(1.0 + p_a / (problem.sigma_b2 + p_max));
  const double omega_f = eps * c_f;
  const double omega_n = c_n;
  const bool use_cf = problem.p_m / problem.sigma_b2 >= rho_star(eps);

  std::vector<BoxCoordinate> box{
      constant("p_a", p_a),
      constant("p_j", 1.0 - eps),
      constant("p_min", p_a),
      constant("p_max", p_max),
      constant("rate", use_cf ? c_f : c_n),
  };
  return DesignSolution(std::move(box), std::max(omega_f, omega_n),
                        use_cf ? "global:rate=Cf" : "global:rate=Cn", eps, problem.p_m,
                        problem.sigma_b2);
}

ContinuousBaseline continuous_baseline(const GlobalProblem& problem) {
  check_global(problem);
  const double eps = problem.epsilon;
  const double p_a = 2.0 * eps * problem.p_m;
  const double p_max = 2.0 * problem.p_m;
  const double c_n = std::log2(1.0 + p_a / (problem.sigma_b2 + p_max));
  std::vector<BoxCoordinate> box{
      constant("p_a", p_a),
      constant("p_j", 1.0),
      constant("p_min", 0.0),
      constant("p_max", p_max),
      constant("rate", c_n),
  };
  return {c_n, DesignSolution(std::move(box), c_n, "continuous:rate=Cn", eps, problem.p_m,
                              problem.sigma_b2)};
}

}  // namespace probjam
