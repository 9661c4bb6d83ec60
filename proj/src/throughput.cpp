#include "probjam/throughput.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace probjam {

Capacities capacities(const SystemParams& params) {
  const double s = params.p_a;
  const double nb = params.sigma_b2;
  const double eps = params.epsilon;
  Capacities c{};
  c.c_n = std::log2(1.0 + s / (nb + params.p_max));
  c.c_j = std::log2(1.0 + s / (nb + params.p_min));
  c.c_f = std::log2(1.0 + s / nb);
  c.c_eps = std::log2(1.0 + eps * s / (eps * nb + s));
  c.c_a = std::log2(1.0 + s / (nb + s));
  c.p_r = params.rate > 0.0 ? s / std::expm1(params.rate * std::log(2.0)) - nb
                            : std::numeric_limits<double>::infinity();
  return c;
}

double outage(const SystemParams& params) {
  validate_powers(params);
  const double r = params.rate;
  if (r <= 0.0) return 0.0;
  const Capacities c = capacities(params);
  if (r <= c.c_n) return 0.0;
  if (r <= c.c_j) {
    const double lambda = params.p_j * (params.p_max - c.p_r) / params.p_l();
    return std::clamp(lambda, 0.0, params.p_j);
  }
  if (r <= c.c_f) return params.p_j;
  return 1.0;
}

double covert_throughput(const SystemParams& params) {
  if (params.rate <= 0.0) return 0.0;
  return params.rate * (1.0 - outage(params));
}

ThroughputProfile throughput_profile(const SystemParams& params) {
  const Capacities c = capacities(params);
  ThroughputProfile out;
  out.c_n = c.c_n;
  out.c_j = c.c_j;
  out.c_f = c.c_f;
  out.c_eps = c.c_eps;
  out.c_a = c.c_a;
  out.p_r = c.p_r;
  out.lambda = outage(params);
  out.omega = covert_throughput(params);
  return out;
}

BestRate best_rate(const SystemParams& params) {
  validate_powers(params);
  const Capacities c = capacities(params);
  const double omega_n = c.c_n;
  const double omega_f = params.q_j() * c.c_f;
  if (omega_f > omega_n) return {c.c_f, omega_f, RateChoice::kCf};
  return {c.c_n, omega_n, RateChoice::kCn};
}

const char* rate_choice_name(RateChoice choice) {
  return choice == RateChoice::kCf ? "Cf" : "Cn";
}

}  // namespace probjam
