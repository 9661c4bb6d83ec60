#pragma once

#include "probjam/covertness.hpp"
#include "probjam/types.hpp"

namespace probjam {

struct GlobalProblem {
  double epsilon = 0.1;
  double p_m = 1.0;
  double sigma_b2 = 1.0;
};

/// Minimum-outage jammer design for a given Alice power and rate.
///
/// Four regimes, split on R against C_eps, C_a and C_f:
///   R <= C_eps        zero outage; any region point with P_max <= P_r   (Omega* = R)
///   C_eps < R < C_a   p_j free, P_max = P_a/eps, P_min = (1-p_j)P_a/eps  (Omega* = eps R P_r / P_a)
///   R = C_a           P_min on l1, P_max bounded by P3 and P5   (Omega* = eps R)
///   C_a < R <= C_f    p_j = 1 - eps, P_min >= P_a                (Omega* = eps R)
/// R = C_a is matched with a 1e-12 relative tolerance. The representative point is always
/// (p_j, P_min, P_max) = (1 - eps, P_a, P_a / eps), the lowest-average-power optimum.
Outcome<DesignSolution> optimize_jammer(const JammerProblem& problem);

/// Alice transmits at the largest covert power and picks the better of C_f and C_n
/// (C_f on ties).
Outcome<DesignSolution> optimize_alice(const AliceProblem& problem);

/// Joint design: P_a = P_min = 2 eps P_m / (1 - eps^2), p_j = 1 - eps,
/// P_max = 2 P_m / (1 - eps^2), and R = C_f iff P_m / sigma_b2 >= rho_star(eps).
DesignSolution optimize_global(const GlobalProblem& problem);

/// l(rho) = eps ln(1 + 2 eps rho / (1 - eps^2)) - ln(1 + 2 eps rho / (1 - eps^2 + 2 rho)).
/// Positive exactly when the joint design prefers C_f.
double rate_switch_margin(double epsilon, double rho);

/// Unique positive root of rate_switch_margin, by bisection to 1e-10 absolute.
double rho_star(double epsilon);

/// Positive stationary point of rate_switch_margin; rho_star lies above it.
double rate_switch_turning_point(double epsilon);

struct ContinuousBaseline {
  double omega_c_star;
  DesignSolution design;
};

/// Always-on jammer reference: p_j = 1, P_a = 2 eps P_m, P_min = 0, P_max = 2 P_m, R = C_n.
ContinuousBaseline continuous_baseline(const GlobalProblem& problem);

}  // namespace probjam
