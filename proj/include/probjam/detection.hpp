#pragma once

#include "probjam/types.hpp"

namespace probjam {

enum class Hypothesis { kH0, kH1 };

struct HypothesisLaw {
  Hypothesis hypothesis;
  MixedDistribution law;
};

/// Asymptotic (N -> inf) law of the warden's average received power.
/// Under H0: atom q_j at sigma_w2 plus uniform mass p_j on (sigma_w2 + P_min, sigma_w2 + P_max).
/// Under H1 everything is shifted right by P_a.
HypothesisLaw law_under(const SystemParams& params, Hypothesis hypothesis);

/// H0 mass of the window [gamma - P_a, gamma). The radiometer's total error is 1 - eta.
double eta(const SystemParams& params, double gamma);

/// Pr(P_w >= gamma | H0).
double false_alarm(const SystemParams& params, double gamma);

/// Pr(P_w < gamma | H1).
double missed_detection(const SystemParams& params, double gamma);

/// Total error P_FA + P_MD of the threshold test at gamma, evaluated as 1 - eta.
double total_error_at(const SystemParams& params, double gamma);

/// Closed-form minimum total error and the full set of minimizing thresholds.
///
/// Dispatches on the Alice-power regime first (rows checked in table order, so
/// regime boundaries resolve to the earlier row), then on p_j against that
/// regime's threshold. When p_j equals the threshold exactly both rows give the
/// same error and the threshold set is their union. With p_j = 0 every
/// threshold in (sigma_w2, sigma_w2 + P_a] is optimal and that set is returned.
DetectionResult min_detection_error(const SystemParams& params);

}  // namespace probjam
