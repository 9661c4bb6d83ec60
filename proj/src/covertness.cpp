#include "probjam/covertness.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "probjam/format.hpp"

namespace probjam {

namespace {

// lhs >= rhs, relaxed by rel_slack of the larger magnitude.
bool at_least(double lhs, double rhs, double rel_slack) {
  const double scale = std::max(std::abs(lhs), std::abs(rhs));
  return lhs >= rhs - rel_slack * scale;
}

void check_epsilon(double epsilon) {
  if (!(std::isfinite(epsilon) && epsilon > 0.0 && epsilon < 0.5)) {
    throw InvalidParameter("epsilon", "epsilon: must lie in (0, 1/2)");
  }
}

void check_positive(double value, const char* name) {
  if (!(std::isfinite(value) && value > 0.0)) {
    throw InvalidParameter(name, std::string(name) + ": must be > 0");
  }
}

}  // namespace

bool covertness_ok(const SystemParams& params, double rel_slack) {
  check_epsilon(params.epsilon);
  const double eps = params.epsilon;
  const double p = params.p_j;
  const double ratio = p / (1.0 - eps);
  return at_least(p, 1.0 - eps, rel_slack) &&
         at_least(params.p_max - params.p_min, p / eps * params.p_a, rel_slack) &&
         at_least((ratio - 1.0) * params.p_max + params.p_min, ratio * params.p_a, rel_slack);
}

bool average_power_ok(const SystemParams& params, double rel_slack) {
  return at_least(params.p_m, 0.5 * params.p_j * (params.p_min + params.p_max), rel_slack);
}

double max_covert_power(double epsilon, double p_m) {
  return 2.0 * epsilon / (1.0 - epsilon * epsilon) * p_m;
}

double max_jamming_probability(double p_a, double epsilon, double p_m) {
  if (p_a <= 2.0 * epsilon * p_m) return 1.0;
  const double root = 1.0 - 2.0 * epsilon * p_m / p_a;
  return 1.0 - std::sqrt(std::max(root, 0.0));
}

// ---------------------------------------------------------------------------

FeasibleRegion::FeasibleRegion(const JammerProblem& problem, Interval pj_range)
    : problem_(problem), pj_range_(pj_range) {}

double FeasibleRegion::l1_l3_pmax(double p_j) const {
  const double eps = problem_.epsilon;
  return (2.0 * (1.0 - eps) * problem_.p_m - p_j * p_j * problem_.p_a) /
         (2.0 * (1.0 - eps) * p_j - p_j * p_j);
}

double FeasibleRegion::l1_pmin(double p_j, double p_max) const {
  const double eps = problem_.epsilon;
  return (1.0 - eps - p_j) / (1.0 - eps) * p_max + p_j / (1.0 - eps) * problem_.p_a;
}

std::optional<Interval> FeasibleRegion::pmax_bounds(double p_j) const {
  if (!pj_range_.contains(p_j)) return std::nullopt;
  const double lo = problem_.p_a / problem_.epsilon;
  const double hi = std::min(l1_l3_pmax(p_j), 2.0 / p_j * problem_.p_m);
  return Interval::tolerant(lo, hi);
}

std::optional<Interval> FeasibleRegion::pmin_bounds(double p_j, double p_max) const {
  const double lo = std::max(0.0, l1_pmin(p_j, p_max));
  const double hi = std::min(p_max - p_j / problem_.epsilon * problem_.p_a,
                             2.0 / p_j * problem_.p_m - p_max);
  return Interval::tolerant(lo, hi);
}

std::vector<Vertex> FeasibleRegion::vertices(double p_j) const {
  const double eps = problem_.epsilon;
  const double s = problem_.p_a;
  const double pm = problem_.p_m;
  const double denom = 2.0 * (1.0 - eps) * p_j - p_j * p_j;
  std::vector<Vertex> out{
      {"P0", s, s},
      {"P1", s / eps, (1.0 - p_j) / eps * s},
      {"P2", pm / p_j + p_j / (2.0 * eps) * s, pm / p_j - p_j / (2.0 * eps) * s},
      {"P3", l1_l3_pmax(p_j), (2.0 * (1.0 - eps - p_j) * pm + p_j * p_j * s) / denom},
      {"P4", s / eps, 2.0 / p_j * pm - s / eps},
  };
  if (p_j + eps - 1.0 > 0.0) out.push_back({"P5", p_j / (p_j + eps - 1.0) * s, 0.0});
  out.push_back({"P6", 2.0 / p_j * pm, 0.0});
  return out;
}

Outcome<FeasibleRegion> jammer_feasible_region(const JammerProblem& problem) {
  check_epsilon(problem.epsilon);
  check_positive(problem.p_a, "p_a");
  check_positive(problem.p_m, "p_m");
  check_positive(problem.sigma_b2, "sigma_b2");
  if (!(std::isfinite(problem.rate) && problem.rate >= 0.0)) {
    throw InvalidParameter("rate", "rate: must be >= 0");
  }

  const double p_cap = max_covert_power(problem.epsilon, problem.p_m);
  if (!at_least(p_cap, problem.p_a, kDefaultSlack)) {
    return Infeasible{InfeasibleReason::kPower,
                      "power infeasible: p_a = " + format_double(problem.p_a) +
                          " exceeds 2*eps/(1-eps^2)*p_m = " + format_double(p_cap)};
  }
  const double c_f = std::log2(1.0 + problem.p_a / problem.sigma_b2);
  if (problem.rate > c_f) {
    return Infeasible{InfeasibleReason::kRate, "rate infeasible: rate = " +
                                                   format_double(problem.rate) +
                                                   " exceeds C_f = " + format_double(c_f)};
  }
  const double pj_lo = 1.0 - problem.epsilon;
  // At the power ceiling the upper end meets 1 - eps; rounding may push it just below.
  const double pj_hi =
      std::max(pj_lo, max_jamming_probability(problem.p_a, problem.epsilon, problem.p_m));
  return FeasibleRegion(problem, Interval::closed(pj_lo, pj_hi));
}

// ---------------------------------------------------------------------------

Outcome<AliceBounds> alice_feasible_region(const AliceProblem& problem) {
  check_epsilon(problem.epsilon);
  check_positive(problem.p_m, "p_m");
  check_positive(problem.sigma_b2, "sigma_b2");
  if (!(problem.p_j >= 0.0 && problem.p_j <= 1.0)) {
    throw InvalidParameter("p_j", "p_j: must lie in [0, 1]");
  }
  if (!(problem.p_min >= 0.0 && std::isfinite(problem.p_min))) {
    throw InvalidParameter("p_min", "p_min: must be >= 0");
  }
  if (!(problem.p_max > problem.p_min && std::isfinite(problem.p_max))) {
    throw InvalidParameter("p_max", "p_max: must satisfy p_max > p_min");
  }

  const double eps = problem.epsilon;
  const double p = problem.p_j;
  const double floor = 1.0 - eps;
  const bool at_floor = std::abs(p - floor) <= kDefaultSlack * floor;
  if (p < floor && !at_floor) {
    return Infeasible{InfeasibleReason::kProbability,
                      "probability infeasible: p_j = " + format_double(p) +
                          " is below 1 - eps = " + format_double(floor)};
  }
  if (at_floor && problem.p_min <= 0.0) {
    return Infeasible{InfeasibleReason::kMinPower,
                      "min-power infeasible: p_j = 1 - eps requires p_min > 0"};
  }
  const double budget = 2.0 / p * problem.p_m;
  if (!at_least(budget, problem.p_min + problem.p_max, kDefaultSlack)) {
    return Infeasible{InfeasibleReason::kAveragePower,
                      "average-power infeasible: p_j*(p_min+p_max)/2 = " +
                          format_double(0.5 * p * (problem.p_min + problem.p_max)) +
                          " exceeds p_m = " + format_double(problem.p_m)};
  }

  const double a = problem.p_min;
  const double b = problem.p_max;
  AliceBounds out{};
  if (a / b <= 1.0 - p) {
    out.branch = PauBranch::kLineOne;
    out.p_au = (1.0 - floor / p) * b + floor / p * a;
  } else {
    out.branch = PauBranch::kSpread;
    out.p_au = eps / p * (b - a);
  }
  out.c_f = std::log2(1.0 + out.p_au / problem.sigma_b2);
  return out;
}

}  // namespace probjam
