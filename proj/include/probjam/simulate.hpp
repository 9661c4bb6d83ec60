#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "probjam/types.hpp"

namespace probjam {

struct SimConfig {
  std::uint64_t n = 100000;  // symbols per slot
  std::uint64_t trials = 100000;
  std::uint64_t seed = 1;
  double hypothesis_mix = 0.5;  // probability that a slot carries Alice's signal
  unsigned threads = 0;         // 0: hardware concurrency; results never depend on it
};

void validate(const SimConfig& cfg);

struct Estimate {
  double value = 0.0;
  double std_error = 0.0;
};

/// Binomial estimate from integer counts; s.e. = sqrt(p (1 - p) / total).
Estimate binomial_estimate(std::uint64_t hits, std::uint64_t total);

struct SimReport {
  std::uint64_t trials = 0;
  std::uint64_t h0_trials = 0;
  std::uint64_t h1_trials = 0;
  std::optional<Estimate> pfa;
  std::optional<Estimate> pmd;
  std::optional<Estimate> xi;  // pfa + pmd; s.e. combines the two independent halves
  std::optional<Estimate> lambda;
  std::optional<double> omega;
};

/// Finite-N radiometer. Per trial the draws are, in order: s_a, s_j, P_j, then
/// P_w = (s_a P_a + s_j P_j + sigma_w2) chi2(2N) / (2N). Decides H1 when P_w >= gamma.
SimReport simulate_detection(const SystemParams& params, double gamma, const SimConfig& cfg);

/// Same trials reused for every threshold (common random numbers).
std::vector<SimReport> simulate_detection_sweep(const SystemParams& params,
                                                const std::vector<double>& gammas,
                                                const SimConfig& cfg);

/// Outage of Bob's link: per trial s_j then P_j, outage when log2(1 + P_a/(s_j P_j + sigma_b2)) < R.
SimReport simulate_outage(const SystemParams& params, const SimConfig& cfg);

}  // namespace probjam
