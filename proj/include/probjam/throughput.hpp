#pragma once

#include "probjam/types.hpp"

namespace probjam {

struct Capacities {
  double c_n;    // worst case: jammer on at P_max
  double c_j;    // jammer on at P_min
  double c_f;    // jammer silent
  double c_eps;  // log2(1 + eps P_a / (eps sigma_b2 + P_a))
  double c_a;    // log2(1 + P_a / (sigma_b2 + P_a))
  double p_r;    // interference headroom P_a / (2^R - 1) - sigma_b2; +inf at R = 0
};

Capacities capacities(const SystemParams& params);

/// Outage probability Pr(C < R), evaluated on rate breakpoints with inclusive boundaries.
double outage(const SystemParams& params);

/// Omega = R (1 - lambda).
double covert_throughput(const SystemParams& params);

ThroughputProfile throughput_profile(const SystemParams& params);

enum class RateChoice { kCn, kCf };

struct BestRate {
  double rate;
  double omega;
  RateChoice choice;
};

/// Better of R = C_n (Omega_n = C_n) and R = C_f (Omega_f = q_j C_f); ties go to C_n.
/// The rate field of params is ignored.
BestRate best_rate(const SystemParams& params);

const char* rate_choice_name(RateChoice choice);

}  // namespace probjam
