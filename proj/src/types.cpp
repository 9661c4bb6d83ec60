#include "probjam/types.hpp"

#include <algorithm>
#include <cmath>

#include "probjam/format.hpp"

namespace probjam {

namespace {

void require(bool ok, const char* parameter, const std::string& message) {
  if (!ok) throw InvalidParameter(parameter, std::string(parameter) + ": " + message);
}

void check_powers(const SystemParams& p) {
  const double fields[] = {p.p_a, p.p_min, p.p_max, p.p_j, p.sigma_w2, p.sigma_b2};
  const char* names[] = {"p_a", "p_min", "p_max", "p_j", "sigma_w2", "sigma_b2"};
  for (int i = 0; i < 6; ++i) require(std::isfinite(fields[i]), names[i], "must be finite");
  require(p.p_a > 0.0, "p_a", "must be > 0");
  require(p.p_min >= 0.0, "p_min", "must be >= 0");
  require(p.p_max > p.p_min, "p_max", "must satisfy p_max > p_min");
  require(p.p_j >= 0.0 && p.p_j <= 1.0, "p_j", "must lie in [0, 1]");
  require(p.sigma_w2 > 0.0, "sigma_w2", "must be > 0");
  require(p.sigma_b2 > 0.0, "sigma_b2", "must be > 0");
}

}  // namespace

SystemParams validate_powers(const SystemParams& params) {
  check_powers(params);
  return params;
}

SystemParams validate(const SystemParams& params) {
  check_powers(params);
  require(std::isfinite(params.epsilon) && params.epsilon > 0.0 && params.epsilon < 0.5,
          "epsilon", "must lie in (0, 1/2)");
  require(std::isfinite(params.p_m) && params.p_m > 0.0, "p_m", "must be > 0");
  require(std::isfinite(params.rate) && params.rate >= 0.0, "rate", "must be >= 0");
  return params;
}

// ---------------------------------------------------------------------------

Interval::Interval(double lo, double hi, bool lo_open, bool hi_open)
    : lo_(lo), hi_(hi), lo_open_(lo_open), hi_open_(hi_open) {
  if (!(lo <= hi)) throw std::invalid_argument("Interval: lo must not exceed hi");
  if (lo == hi && (lo_open || hi_open)) throw std::invalid_argument("Interval: empty point");
}

std::optional<Interval> Interval::tolerant(double lo, double hi, double rel_tol) {
  if (lo <= hi) return Interval(lo, hi);
  const double scale = std::max({std::abs(lo), std::abs(hi), 1.0});
  if (lo - hi <= rel_tol * scale) return Interval::point(0.5 * (lo + hi));
  return std::nullopt;
}

bool Interval::contains(double x) const {
  const bool above = lo_open_ ? x > lo_ : x >= lo_;
  const bool below = hi_open_ ? x < hi_ : x <= hi_;
  return above && below;
}

std::vector<double> Interval::sample(std::size_t n) const {
  if (is_point()) return {lo_};
  std::vector<double> out;
  out.reserve(n + 2);
  if (!lo_open_) out.push_back(lo_);
  for (std::size_t k = 1; k <= n; ++k) {
    out.push_back(lo_ + (hi_ - lo_) * static_cast<double>(k) / static_cast<double>(n + 1));
  }
  if (!hi_open_) out.push_back(hi_);
  return out;
}

std::string Interval::to_string() const {
  if (is_point()) return "{" + format_double(lo_) + "}";
  return std::string(lo_open_ ? "(" : "[") + format_double(lo_) + ";" + format_double(hi_) +
         (hi_open_ ? ")" : "]");
}

// ---------------------------------------------------------------------------

void IntervalSet::add(const Interval& part) {
  parts_.push_back(part);
  std::sort(parts_.begin(), parts_.end(), [](const Interval& a, const Interval& b) {
    if (a.lo() != b.lo()) return a.lo() < b.lo();
    return !a.lo_open() && b.lo_open();
  });
  std::vector<Interval> merged;
  for (const auto& next : parts_) {
    if (merged.empty()) {
      merged.push_back(next);
      continue;
    }
    const Interval& last = merged.back();
    const bool overlaps = next.lo() < last.hi() ||
                          (next.lo() == last.hi() && (!last.hi_open() || !next.lo_open()));
    if (!overlaps) {
      merged.push_back(next);
      continue;
    }
    double hi = last.hi();
    bool hi_open = last.hi_open();
    if (next.hi() > hi) {
      hi = next.hi();
      hi_open = next.hi_open();
    } else if (next.hi() == hi) {
      hi_open = hi_open && next.hi_open();
    }
    const bool lo_open = last.lo_open() && !(next.lo() == last.lo() && !next.lo_open());
    merged.back() = Interval(last.lo(), hi, lo_open, hi_open);
  }
  parts_ = std::move(merged);
}

bool IntervalSet::contains(double x) const {
  return std::any_of(parts_.begin(), parts_.end(),
                     [x](const Interval& part) { return part.contains(x); });
}

std::vector<double> IntervalSet::sample(std::size_t n_per_part) const {
  std::vector<double> out;
  for (const auto& part : parts_) {
    auto pts = part.sample(n_per_part);
    out.insert(out.end(), pts.begin(), pts.end());
  }
  return out;
}

double IntervalSet::representative() const {
  if (parts_.empty()) throw std::logic_error("IntervalSet::representative on empty set");
  const Interval* widest = &parts_.front();
  for (const auto& part : parts_) {
    if (part.length() > widest->length()) widest = &part;
  }
  return widest->midpoint();
}

std::string IntervalSet::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += "|";
    out += parts_[i].to_string();
  }
  return out;
}

// ---------------------------------------------------------------------------

double MixedDistribution::mass_in(double lo, double hi) const {
  if (!(lo < hi)) return 0.0;
  double mass = 0.0;
  if (lo <= atom_location && atom_location < hi) mass += atom_mass;
  const double overlap = std::min(hi, segment_hi) - std::max(lo, segment_lo);
  if (overlap > 0.0) mass += segment_mass * overlap / (segment_hi - segment_lo);
  return mass;
}

double MixedDistribution::cdf_below(double x) const {
  double mass = atom_location < x ? atom_mass : 0.0;
  if (x > segment_lo) {
    mass += segment_mass * (std::min(x, segment_hi) - segment_lo) / (segment_hi - segment_lo);
  }
  return mass;
}

MixedDistribution MixedDistribution::shifted(double dx) const {
  MixedDistribution out = *this;
  out.atom_location += dx;
  out.segment_lo += dx;
  out.segment_hi += dx;
  return out;
}

// ---------------------------------------------------------------------------

std::string_view branch_name(TableBranch branch) {
  switch (branch) {
    case TableBranch::kAboveMaxPartial: return "pa_ge_pmax.partial";
    case TableBranch::kAboveMaxContinuous: return "pa_ge_pmax.continuous";
    case TableBranch::kBelowMinSpreadAtom: return "pa_le_min_pmin_pl.atom";
    case TableBranch::kBelowMinSpreadSegment: return "pa_le_min_pmin_pl.segment";
    case TableBranch::kInsideSpreadEdge: return "pmin_lt_pa_le_pl.edge";
    case TableBranch::kInsideSpreadSegment: return "pmin_lt_pa_le_pl.segment";
    case TableBranch::kBelowMinAtom: return "pl_lt_pa_le_pmin.atom";
    case TableBranch::kBelowMinCover: return "pl_lt_pa_le_pmin.cover";
    case TableBranch::kAboveBothEdge: return "pa_gt_max_pmin_pl.edge";
    case TableBranch::kAboveBothCover: return "pa_gt_max_pmin_pl.cover";
  }
  return "unknown";
}

std::string_view reason_name(InfeasibleReason reason) {
  switch (reason) {
    case InfeasibleReason::kPower: return "power";
    case InfeasibleReason::kRate: return "rate";
    case InfeasibleReason::kProbability: return "probability";
    case InfeasibleReason::kMinPower: return "min_power";
    case InfeasibleReason::kAveragePower: return "average_power";
  }
  return "unknown";
}

// ---------------------------------------------------------------------------

DesignSolution::DesignSolution(std::vector<BoxCoordinate> box, double omega_star,
                               std::string case_label, double epsilon, double p_m,
                               double sigma_b2)
    : box_(std::move(box)),
      omega_star_(omega_star),
      case_label_(std::move(case_label)),
      epsilon_(epsilon),
      p_m_(p_m),
      sigma_b2_(sigma_b2) {}

DesignPoint DesignSolution::representative() const {
  DesignPoint point;
  for (const auto& coord : box_) point[coord.name] = coord.bounds(point).lo();
  return point;
}

std::vector<std::pair<std::string, Interval>> DesignSolution::ranges_at_representative() const {
  std::vector<std::pair<std::string, Interval>> out;
  DesignPoint point;
  for (const auto& coord : box_) {
    const Interval range = coord.bounds(point);
    out.emplace_back(coord.name, range);
    point[coord.name] = range.lo();
  }
  return out;
}

DesignPoint DesignSolution::sample(const std::function<double()>& u01) const {
  DesignPoint point;
  for (const auto& coord : box_) {
    const Interval range = coord.bounds(point);
    point[coord.name] = range.is_point() ? range.lo() : range.lo() + range.length() * u01();
  }
  return point;
}

bool DesignSolution::contains(const DesignPoint& point, double rel_tol) const {
  for (const auto& coord : box_) {
    auto it = point.find(coord.name);
    if (it == point.end()) return false;
    const Interval range = coord.bounds(point);
    const double scale = std::max({std::abs(range.lo()), std::abs(range.hi()), 1.0});
    if (it->second < range.lo() - rel_tol * scale || it->second > range.hi() + rel_tol * scale) {
      return false;
    }
  }
  return true;
}

SystemParams DesignSolution::params_at(const DesignPoint& point) const {
  auto get = [&](const char* key) {
    auto it = point.find(key);
    if (it == point.end()) throw std::out_of_range(std::string("design point lacks ") + key);
    return it->second;
  };
  SystemParams params;
  params.p_a = get("p_a");
  params.p_min = get("p_min");
  params.p_max = get("p_max");
  params.p_j = get("p_j");
  params.rate = get("rate");
  params.epsilon = epsilon_;
  params.p_m = p_m_;
  params.sigma_b2 = sigma_b2_;
  return params;
}

}  // namespace probjam
