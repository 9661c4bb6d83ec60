#include "probjam/detection.hpp"

#include <algorithm>
#include <cmath>

namespace probjam {

HypothesisLaw law_under(const SystemParams& params, Hypothesis hypothesis) {
  validate_powers(params);
  MixedDistribution h0{
      .atom_location = params.sigma_w2,
      .atom_mass = params.q_j(),
      .segment_lo = params.sigma_w2 + params.p_min,
      .segment_hi = params.sigma_w2 + params.p_max,
      .segment_mass = params.p_j,
  };
  if (hypothesis == Hypothesis::kH0) return {hypothesis, h0};
  return {hypothesis, h0.shifted(params.p_a)};
}

double eta(const SystemParams& params, double gamma) {
  if (!std::isfinite(gamma)) return 0.0;
  const MixedDistribution h0 = law_under(params, Hypothesis::kH0).law;
  // Atom test written as atom + P_a >= gamma rather than atom >= gamma - P_a, so a
  // threshold computed as sigma_w2 + P_a keeps the atom inside the window.
  double mass = 0.0;
  if (h0.atom_location < gamma && h0.atom_location + params.p_a >= gamma) mass += h0.atom_mass;
  const double overlap = std::min(gamma, h0.segment_hi) - std::max(gamma - params.p_a, h0.segment_lo);
  if (overlap > 0.0) mass += h0.density() * overlap;
  return mass;
}

double false_alarm(const SystemParams& params, double gamma) {
  return 1.0 - law_under(params, Hypothesis::kH0).law.cdf_below(gamma);
}

double missed_detection(const SystemParams& params, double gamma) {
  return law_under(params, Hypothesis::kH1).law.cdf_below(gamma);
}

double total_error_at(const SystemParams& params, double gamma) {
  return 1.0 - eta(params, gamma);
}

namespace {

struct Row {
  double xi;
  IntervalSet gamma;
  TableBranch branch;
};

}  // namespace

DetectionResult min_detection_error(const SystemParams& params) {
  validate_powers(params);
  const double s = params.p_a;
  const double a = params.p_min;
  const double b = params.p_max;
  const double l = params.p_l();
  const double p = params.p_j;
  const double q = params.q_j();
  const double w = params.sigma_w2;

  if (s >= b) {
    if (p == 1.0) {
      return {0.0, IntervalSet(Interval::closed(w + b, w + a + s)),
              TableBranch::kAboveMaxContinuous, false};
    }
    if (p == 0.0) {
      return {0.0, IntervalSet(Interval::left_open(w, w + s)), TableBranch::kAboveMaxPartial,
              false};
    }
    return {0.0, IntervalSet(Interval::closed(w + b, w + s)), TableBranch::kAboveMaxPartial,
            false};
  }

  // Each regime offers two candidate threshold sets; `low` wins below the p_j threshold.
  double threshold = 0.0;
  Row low{0.0, {}, TableBranch::kBelowMinSpreadAtom};
  Row high{0.0, {}, TableBranch::kBelowMinSpreadSegment};
  // Built on demand: each is a valid interval only inside its own regime.
  const Interval atom_window = Interval::left_open(w, w + s);
  auto inside_segment = [&] { return Interval::closed(w + a + s, w + b); };
  auto covering_segment = [&] { return Interval::closed(w + b, w + a + s); };

  if (s <= std::min(a, l)) {
    threshold = l / (l + s);
    low = {p, IntervalSet(atom_window), TableBranch::kBelowMinSpreadAtom};
    high = {1.0 - p * s / l, IntervalSet(inside_segment()), TableBranch::kBelowMinSpreadSegment};
  } else if (a < s && s <= l) {
    threshold = l / b;
    low = {p * (b - s) / l, IntervalSet(Interval::point(w + s)), TableBranch::kInsideSpreadEdge};
    high = {1.0 - p * s / l, IntervalSet(inside_segment()), TableBranch::kInsideSpreadSegment};
  } else if (l < s && s <= a) {
    threshold = 0.5;
    low = {p, IntervalSet(atom_window), TableBranch::kBelowMinAtom};
    high = {q, IntervalSet(covering_segment()), TableBranch::kBelowMinCover};
  } else {
    threshold = l / (l + b - s);
    low = {p * (b - s) / l, IntervalSet(Interval::point(w + s)), TableBranch::kAboveBothEdge};
    high = {q, IntervalSet(covering_segment()), TableBranch::kAboveBothCover};
  }

  if (p == 0.0) return {0.0, IntervalSet(atom_window), low.branch, false};
  if (p < threshold) return {low.xi, low.gamma, low.branch, false};
  if (p > threshold) return {high.xi, high.gamma, high.branch, false};

  IntervalSet both = low.gamma;
  for (const auto& part : high.gamma.parts()) both.add(part);
  return {std::min(low.xi, high.xi), both, low.branch, true};
}

}  // namespace probjam
