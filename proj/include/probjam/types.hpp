#pragma once

#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace probjam {

/// Relative slack applied by default when re-checking closed-form constraints,
/// so points that sit exactly on a constraint surface survive rounding.
inline constexpr double kDefaultSlack = 1e-12;

/// Full parameter tuple of the covert link. All powers are linear (watts).
struct SystemParams {
  double p_a = 0.0;       // Alice transmit power
  double p_min = 0.0;     // minimum jamming power
  double p_max = 0.0;     // maximum jamming power
  double p_j = 0.0;       // jammer transmission probability
  double sigma_w2 = 1.0;  // warden noise variance
  double sigma_b2 = 1.0;  // Bob noise variance
  double epsilon = 0.1;   // covertness level
  double p_m = 1.0;       // average jamming power budget
  double rate = 0.0;      // Alice rate, bits per channel use

  [[nodiscard]] double p_l() const { return p_max - p_min; }
  [[nodiscard]] double q_j() const { return 1.0 - p_j; }
};

class InvalidParameter : public std::invalid_argument {
 public:
  InvalidParameter(std::string parameter, const std::string& what)
      : std::invalid_argument(what), parameter_(std::move(parameter)) {}

  [[nodiscard]] const std::string& parameter() const { return parameter_; }

 private:
  std::string parameter_;
};

/// Checks every invariant of SystemParams, epsilon included. Throws InvalidParameter.
SystemParams validate(const SystemParams& params);

/// Checks only what the detector needs: powers, noise and p_j.
SystemParams validate_powers(const SystemParams& params);

/// Closed interval by default; either endpoint may be open.
class Interval {
 public:
  Interval(double lo, double hi, bool lo_open = false, bool hi_open = false);

  static Interval closed(double lo, double hi) { return {lo, hi}; }
  static Interval point(double x) { return {x, x}; }
  static Interval left_open(double lo, double hi) { return {lo, hi, true, false}; }

  /// Builds [lo, hi], collapsing to a point when hi undershoots lo by rounding only.
  static std::optional<Interval> tolerant(double lo, double hi, double rel_tol = 1e-12);

  [[nodiscard]] double lo() const { return lo_; }
  [[nodiscard]] double hi() const { return hi_; }
  [[nodiscard]] bool lo_open() const { return lo_open_; }
  [[nodiscard]] bool hi_open() const { return hi_open_; }

  [[nodiscard]] bool is_point() const { return lo_ == hi_; }
  [[nodiscard]] double length() const { return hi_ - lo_; }
  [[nodiscard]] double midpoint() const { return lo_ + 0.5 * (hi_ - lo_); }
  [[nodiscard]] bool contains(double x) const;

  /// n points evenly spread over the interval, never on an open endpoint.
  [[nodiscard]] std::vector<double> sample(std::size_t n) const;

  [[nodiscard]] std::string to_string() const;

  friend bool operator==(const Interval&, const Interval&) = default;

 private:
  double lo_;
  double hi_;
  bool lo_open_;
  bool hi_open_;
};

/// Finite union of disjoint intervals kept sorted; touching parts are merged.
class IntervalSet {
 public:
  IntervalSet() = default;
  explicit IntervalSet(Interval part) { add(part); }

  void add(const Interval& part);

  [[nodiscard]] const std::vector<Interval>& parts() const { return parts_; }
  [[nodiscard]] bool contains(double x) const;
  [[nodiscard]] bool empty() const { return parts_.empty(); }
  [[nodiscard]] std::vector<double> sample(std::size_t n_per_part) const;

  /// Midpoint of the widest part (the first one on ties).
  [[nodiscard]] double representative() const;

  [[nodiscard]] std::string to_string() const;

 private:
  std::vector<Interval> parts_;
};

/// One atom plus one uniform segment.
struct MixedDistribution {
  double atom_location = 0.0;
  double atom_mass = 0.0;
  double segment_lo = 0.0;
  double segment_hi = 1.0;
  double segment_mass = 0.0;

  [[nodiscard]] double density() const { return segment_mass / (segment_hi - segment_lo); }
  [[nodiscard]] double total_mass() const { return atom_mass + segment_mass; }

  /// Probability of [lo, hi): the atom counts iff lo <= atom_location < hi.
  [[nodiscard]] double mass_in(double lo, double hi) const;

  /// Probability of (-inf, x).
  [[nodiscard]] double cdf_below(double x) const;

  [[nodiscard]] MixedDistribution shifted(double dx) const;

  friend bool operator==(const MixedDistribution&, const MixedDistribution&) = default;
};

/// The ten rows of the optimal-threshold table, grouped by Alice-power regime.
enum class TableBranch {
  kAboveMaxPartial,        // P_a >= P_max, p_j < 1
  kAboveMaxContinuous,     // P_a >= P_max, p_j = 1
  kBelowMinSpreadAtom,     // P_a <= min(P_min, P_L), low p_j
  kBelowMinSpreadSegment,  // P_a <= min(P_min, P_L), high p_j
  kInsideSpreadEdge,       // P_min < P_a <= P_L, low p_j
  kInsideSpreadSegment,    // P_min < P_a <= P_L, high p_j
  kBelowMinAtom,           // P_L < P_a <= P_min, p_j < 1/2
  kBelowMinCover,          // P_L < P_a <= P_min, p_j > 1/2
  kAboveBothEdge,          // max(P_min, P_L) < P_a < P_max, low p_j
  kAboveBothCover,         // max(P_min, P_L) < P_a < P_max, high p_j
};

inline constexpr int kTableBranchCount = 10;

std::string_view branch_name(TableBranch branch);

struct DetectionResult {
  double xi_star = 0.0;
  IntervalSet gamma_star;
  TableBranch branch = TableBranch::kAboveMaxPartial;
  /// p_j sits exactly on the condition-2 threshold; gamma_star is the union of both rows.
  bool tie = false;
};

struct ThroughputProfile {
  double c_n = 0.0;
  double c_j = 0.0;
  double c_f = 0.0;
  double c_eps = 0.0;
  double c_a = 0.0;
  double p_r = 0.0;
  double lambda = 0.0;
  double omega = 0.0;
};

enum class InfeasibleReason {
  kPower,          // Alice power above what covertness allows
  kRate,           // rate above the jam-free capacity
  kProbability,    // p_j below 1 - epsilon
  kMinPower,       // p_j = 1 - epsilon needs P_min > 0
  kAveragePower,   // jammer average power above budget
};

std::string_view reason_name(InfeasibleReason reason);

struct Infeasible {
  InfeasibleReason reason;
  std::string detail;
};

template <class T>
using Outcome = std::variant<T, Infeasible>;

template <class T>
bool is_feasible(const Outcome<T>& outcome) {
  return std::holds_alternative<T>(outcome);
}

/// Named design variables: p_a, rate, p_j, p_min, p_max.
using DesignPoint = std::map<std::string, double>;

/// One coordinate of a solution box. Its bounds may depend on coordinates listed before it.
struct BoxCoordinate {
  std::string name;
  std::function<Interval(const DesignPoint&)> bounds;
  std::string constraint;  // human-readable coupling, empty for constants
};

/// Output of an optimizer: a (possibly degenerate) box of optimal designs.
class DesignSolution {
 public:
  DesignSolution() = default;
  DesignSolution(std::vector<BoxCoordinate> box, double omega_star, std::string case_label,
                 double epsilon, double p_m, double sigma_b2);

  [[nodiscard]] const std::vector<BoxCoordinate>& box() const { return box_; }
  [[nodiscard]] double omega_star() const { return omega_star_; }
  [[nodiscard]] const std::string& case_label() const { return case_label_; }

  /// Every coordinate at its lower bound, in box order.
  [[nodiscard]] DesignPoint representative() const;

  /// Coordinate ranges evaluated along the path to representative().
  [[nodiscard]] std::vector<std::pair<std::string, Interval>> ranges_at_representative() const;

  /// Draws each coordinate uniformly from its bounds given the earlier ones; u01 yields [0,1).
  [[nodiscard]] DesignPoint sample(const std::function<double()>& u01) const;

  [[nodiscard]] bool contains(const DesignPoint& point, double rel_tol = 1e-9) const;

  /// Full parameter tuple at a design point (sigma_w2 left at its default).
  [[nodiscard]] SystemParams params_at(const DesignPoint& point) const;

 private:
  std::vector<BoxCoordinate> box_;
  double omega_star_ = 0.0;
  std::string case_label_;
  double epsilon_ = 0.0;
  double p_m_ = 0.0;
  double sigma_b2_ = 1.0;
};

}  // namespace probjam
