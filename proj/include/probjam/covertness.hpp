#pragma once

#include <optional>
#include <string>
#include <vector>

#include "probjam/types.hpp"

namespace probjam {

/// Three-inequality form of the covertness requirement xi* >= 1 - epsilon:
///   p_j >= 1 - eps,
///   P_max - P_min >= (p_j / eps) P_a,
///   (p_j / (1 - eps) - 1) P_max + P_min >= (p_j / (1 - eps)) P_a.
/// `rel_slack` relaxes each inequality by that fraction of its magnitude; pass 0 for exact tests.
bool covertness_ok(const SystemParams& params, double rel_slack = kDefaultSlack);

/// Jammer average power budget: p_j (P_min + P_max) / 2 <= P_m.
bool average_power_ok(const SystemParams& params, double rel_slack = kDefaultSlack);

/// Jammer-side problem inputs: Alice's power and rate are given.
struct JammerProblem {
  double p_a = 0.0;
  double rate = 0.0;
  double epsilon = 0.1;
  double p_m = 1.0;
  double sigma_b2 = 1.0;
};

/// Alice-side problem inputs: the jamming law is given.
struct AliceProblem {
  double p_j = 0.0;
  double p_min = 0.0;
  double p_max = 0.0;
  double epsilon = 0.1;
  double p_m = 1.0;
  double sigma_b2 = 1.0;
};

/// Named corner of the (P_max, P_min) constraint polygon for a fixed p_j.
struct Vertex {
  std::string label;  // "P0" .. "P6"
  double p_max;
  double p_min;
};

/// Jammer designs (p_j, P_max, P_min) meeting covertness and the power budget for a given P_a.
///
/// For fixed p_j the admissible (P_max, P_min) pairs form a polygon bounded by
///   l1: P_min = ((1 - eps - p_j) / (1 - eps)) P_max + (p_j / (1 - eps)) P_a
///   l2: P_min = P_max - (p_j / eps) P_a
///   l3: P_min = (2 / p_j) P_m - P_max
/// and P_min >= 0.
class FeasibleRegion {
 public:
  FeasibleRegion(const JammerProblem& problem, Interval pj_range);

  [[nodiscard]] const Interval& pj_range() const { return pj_range_; }
  [[nodiscard]] const JammerProblem& problem() const { return problem_; }

  /// Admissible P_max for this p_j; empty when the slice is empty.
  [[nodiscard]] std::optional<Interval> pmax_bounds(double p_j) const;

  /// Admissible P_min for this p_j and P_max; empty when the slice is empty.
  [[nodiscard]] std::optional<Interval> pmin_bounds(double p_j, double p_max) const;

  /// Abscissa of P3, where l1 meets l3.
  [[nodiscard]] double l1_l3_pmax(double p_j) const;

  /// P_min on line l1 at the given P_max.
  [[nodiscard]] double l1_pmin(double p_j, double p_max) const;

  /// The labelled polygon corners; P5 is omitted when p_j = 1 - eps (it lies at infinity).
  [[nodiscard]] std::vector<Vertex> vertices(double p_j) const;

 private:
  JammerProblem problem_;
  Interval pj_range_;
};

/// Largest P_a that keeps the jammer problem feasible: 2 eps P_m / (1 - eps^2).
double max_covert_power(double epsilon, double p_m);

/// Maximum jamming probability for a given P_a (1 when P_a <= 2 eps P_m).
double max_jamming_probability(double p_a, double epsilon, double p_m);

/// Feasibility of the jammer-side problem and its region. Infeasible when Alice's power
/// exceeds max_covert_power or the rate exceeds the jam-free capacity.
Outcome<FeasibleRegion> jammer_feasible_region(const JammerProblem& problem);

enum class PauBranch {
  kLineOne,  // P_min / P_max <= 1 - p_j: third covertness inequality binds
  kSpread,   // P_min / P_max >= 1 - p_j: spread inequality binds
};

struct AliceBounds {
  double p_au;  // Alice's maximum covert power
  double c_f;   // rate ceiling, log2(1 + P_au / sigma_b2)
  PauBranch branch;
};

/// Feasibility of the Alice-side problem and the power/rate ceilings that covertness allows.
Outcome<AliceBounds> alice_feasible_region(const AliceProblem& problem);

}  // namespace probjam
