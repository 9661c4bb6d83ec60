#include "probjam/simulate.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <thread>

#include "probjam/rng.hpp"

namespace probjam {

namespace {

unsigned worker_count(const SimConfig& cfg) {
  unsigned n = cfg.threads ? cfg.threads : std::max(1u, std::thread::hardware_concurrency());
  return static_cast<unsigned>(std::min<std::uint64_t>(n, cfg.trials));
}

// Runs body(first, last, slot) over contiguous trial ranges; slots are reduced by the caller
// in index order.
template <class Body>
void for_trial_chunks(const SimConfig& cfg, unsigned workers, Body body) {
  const std::uint64_t chunk = (cfg.trials + workers - 1) / workers;
  if (workers == 1) {
    body(0, cfg.trials, 0u);
    return;
  }
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w) {
    const std::uint64_t first = std::min(cfg.trials, w * chunk);
    const std::uint64_t last = std::min(cfg.trials, first + chunk);
    pool.emplace_back([=, &body] { body(first, last, w); });
  }
  for (auto& t : pool) t.join();
}

struct DetectionCounts {
  std::uint64_t h0 = 0;
  std::uint64_t h1 = 0;
  std::vector<std::uint64_t> false_alarms;
  std::vector<std::uint64_t> misses;
};

}  // namespace

void validate(const SimConfig& cfg) {
  if (cfg.n < 1) throw InvalidParameter("n", "n: must be >= 1");
  if (cfg.trials < 1) throw InvalidParameter("trials", "trials: must be >= 1");
  if (!(cfg.hypothesis_mix > 0.0 && cfg.hypothesis_mix < 1.0)) {
    throw InvalidParameter("hypothesis_mix", "hypothesis_mix: must lie in (0, 1)");
  }
}

Estimate binomial_estimate(std::uint64_t hits, std::uint64_t total) {
  if (total == 0) return {std::nan(""), std::nan("")};
  const double p = static_cast<double>(hits) / static_cast<double>(total);
  return {p, std::sqrt(p * (1.0 - p) / static_cast<double>(total))};
}

std::vector<SimReport> simulate_detection_sweep(const SystemParams& params,
                                                const std::vector<double>& gammas,
                                                const SimConfig& cfg) {
  validate_powers(params);
  validate(cfg);
  if (gammas.empty()) throw std::invalid_argument("simulate_detection_sweep: empty gamma grid");

  const unsigned workers = worker_count(cfg);
  std::vector<DetectionCounts> slots(workers);
  for (auto& slot : slots) {
    slot.false_alarms.assign(gammas.size(), 0);
    slot.misses.assign(gammas.size(), 0);
  }
  const double spread = params.p_l();

  for_trial_chunks(cfg, workers, [&](std::uint64_t first, std::uint64_t last, unsigned w) {
    DetectionCounts& c = slots[w];
    for (std::uint64_t t = first; t < last; ++t) {
      Rng rng = Rng::stream(cfg.seed, t);
      const bool h1 = rng.uniform01() < cfg.hypothesis_mix;
      const bool jam = rng.uniform01() < params.p_j;
      const double p_jam = params.p_min + spread * rng.uniform01();
      const double power = (h1 ? params.p_a : 0.0) + (jam ? p_jam : 0.0) + params.sigma_w2;
      const double p_w = power * rng.chi_squared_2n(cfg.n) / (2.0 * static_cast<double>(cfg.n));
      (h1 ? c.h1 : c.h0) += 1;
      for (std::size_t g = 0; g < gammas.size(); ++g) {
        const bool says_h1 = p_w >= gammas[g];
        if (h1 && !says_h1) ++c.misses[g];
        if (!h1 && says_h1) ++c.false_alarms[g];
      }
    }
  });

  DetectionCounts total;
  total.false_alarms.assign(gammas.size(), 0);
  total.misses.assign(gammas.size(), 0);
  for (const auto& slot : slots) {
    total.h0 += slot.h0;
    total.h1 += slot.h1;
    for (std::size_t g = 0; g < gammas.size(); ++g) {
      total.false_alarms[g] += slot.false_alarms[g];
      total.misses[g] += slot.misses[g];
    }
  }

  std::vector<SimReport> out(gammas.size());
  for (std::size_t g = 0; g < gammas.size(); ++g) {
    SimReport& r = out[g];
    r.trials = cfg.trials;
    r.h0_trials = total.h0;
    r.h1_trials = total.h1;
    r.pfa = binomial_estimate(total.false_alarms[g], total.h0);
    r.pmd = binomial_estimate(total.misses[g], total.h1);
    r.xi = Estimate{r.pfa->value + r.pmd->value,
                    std::hypot(r.pfa->std_error, r.pmd->std_error)};
  }
  return out;
}

SimReport simulate_detection(const SystemParams& params, double gamma, const SimConfig& cfg) {
  return simulate_detection_sweep(params, {gamma}, cfg).front();
}

SimReport simulate_outage(const SystemParams& params, const SimConfig& cfg) {
  validate_powers(params);
  if (!(params.rate >= 0.0 && std::isfinite(params.rate))) {
    throw InvalidParameter("rate", "rate: must be >= 0");
  }
  validate(cfg);

  const unsigned workers = worker_count(cfg);
  std::vector<std::uint64_t> slots(workers, 0);
  const double spread = params.p_l();
  for_trial_chunks(cfg, workers, [&](std::uint64_t first, std::uint64_t last, unsigned w) {
    std::uint64_t hits = 0;
    for (std::uint64_t t = first; t < last; ++t) {
      Rng rng = Rng::stream(cfg.seed, t);
      const bool jam = rng.uniform01() < params.p_j;
      const double p_jam = params.p_min + spread * rng.uniform01();
      const double c = std::log2(1.0 + params.p_a / ((jam ? p_jam : 0.0) + params.sigma_b2));
      if (c < params.rate) ++hits;
    }
    slots[w] = hits;
  });

  std::uint64_t hits = 0;
  for (auto h : slots) hits += h;
  SimReport r;
  r.trials = cfg.trials;
  r.lambda = binomial_estimate(hits, cfg.trials);
  r.omega = params.rate * (1.0 - r.lambda->value);
  return r;
}

}  // namespace probjam
