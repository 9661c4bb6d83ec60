#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <limits>

#include "probjam/covertness.hpp"
#include "probjam/optimize.hpp"
#include "probjam/types.hpp"

namespace probjam {

struct GridSpec {
  std::size_t points = 30;  // per dimension and per pass
  int refinements = 2;
  double zoom_cells = 3.0;  // each refinement spans this many cells around the incumbent
};

template <std::size_t D>
struct GridResult {
  double value = std::numeric_limits<double>::infinity();
  std::array<double, D> point{};
  std::uint64_t evaluations = 0;
};

/// Exhaustive grid minimization with zoomed refinement passes.
///
/// Cells are independent, and ties are broken by value then lexicographic point, so the
/// result does not depend on evaluation order. Infeasible points should return +inf.
template <std::size_t D, class F>
GridResult<D> refined_grid_minimize(F&& f, const std::array<double, D>& lo,
                                    const std::array<double, D>& hi, const GridSpec& spec = {}) {
  GridResult<D> best;
  std::array<double, D> cur_lo = lo;
  std::array<double, D> cur_hi = hi;
  for (int pass = 0; pass <= spec.refinements; ++pass) {
    std::array<double, D> step{};
    std::array<std::size_t, D> count{};
    std::size_t total = 1;
    for (std::size_t d = 0; d < D; ++d) {
      count[d] = cur_hi[d] > cur_lo[d] ? spec.points : 1;
      step[d] = count[d] > 1 ? (cur_hi[d] - cur_lo[d]) / static_cast<double>(count[d] - 1) : 0.0;
      total *= count[d];
    }
    std::array<double, D> x{};
    for (std::size_t flat = 0; flat < total; ++flat) {
      std::size_t rest = flat;
      for (std::size_t d = D; d-- > 0;) {
        const std::size_t k = rest % count[d];
        rest /= count[d];
        // endpoints are hit exactly
        x[d] = k + 1 == count[d] ? cur_hi[d] : cur_lo[d] + step[d] * static_cast<double>(k);
      }
      const double v = f(x);
      ++best.evaluations;
      if (v < best.value || (v == best.value && v < std::numeric_limits<double>::infinity() &&
                             x < best.point)) {
        best.value = v;
        best.point = x;
      }
    }
    if (!(best.value < std::numeric_limits<double>::infinity())) break;
    for (std::size_t d = 0; d < D; ++d) {
      const double half = 0.5 * spec.zoom_cells * step[d];
      cur_lo[d] = std::max(lo[d], best.point[d] - half);
      cur_hi[d] = std::min(hi[d], best.point[d] + half);
    }
  }
  return best;
}

struct BruteForceXi {
  double xi;
  double gamma;
};

/// Minimum of the total detection error over a dense threshold grid on
/// [sigma_w2, sigma_w2 + P_max + P_a] plus every kink of the error curve and its
/// immediate neighbours.
BruteForceXi brute_force_xi(const SystemParams& params, std::size_t grid_points = 20001);

struct Verification {
  double closed_form = 0.0;  // Omega* claimed by the optimizer
  double oracle = 0.0;       // best Omega the grid found (0 when nothing feasible was hit)
  double gap = 0.0;          // (oracle - closed_form) / |closed_form|, absolute when it is 0
  bool found_feasible = false;
  DesignPoint oracle_point;
  std::uint64_t evaluations = 0;
};

/// Minimizes outage over p_j in [1-eps, 1], P_max in [P_a, 2 P_m/(1-eps)] and P_min swept
/// across the window covertness and the power budget leave for that (p_j, P_max).
Verification verify_jammer(const JammerProblem& problem, const DesignSolution& solution,
                           const GridSpec& spec = {});

/// Maximizes Omega over P_a in (0, eps P_L / p_j] and R = u log2(1 + P_a / sigma_b2).
Verification verify_alice(const AliceProblem& problem, const DesignSolution& solution,
                          const GridSpec& spec = {});

/// Maximizes the better-rate throughput over (p_j, P_max, P_min / P_max, P_a / P_a,max).
Verification verify_global(const GlobalProblem& problem, const DesignSolution& solution,
                           const GridSpec& spec = {});

/// Largest P_a passing covertness_ok (no slack) for a fixed jamming law, by bisection.
double bisect_max_covert_power(const AliceProblem& problem, double rel_tol = 1e-15);

}  // namespace probjam
