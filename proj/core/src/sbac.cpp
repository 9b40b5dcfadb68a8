#include "specshare/sbac.hpp"

#include <algorithm>
#include <cmath>

#include "specshare/errors.hpp"

namespace specshare {

double availability_prob(int available_count, int total_count) {
  require(total_count >= 1, "availability_prob: total channel count must be >= 1");
  ensure(available_count >= 0 && available_count <= total_count,
         "availability_prob: available count out of range");
  return static_cast<double>(available_count) / static_cast<double>(total_count);
}

double freq_spread(std::span<const double> freqs_hz, double floor_hz) {
  ensure(!freqs_hz.empty(), "freq_spread: empty frequency list");
  const auto [lo, hi] = std::minmax_element(freqs_hz.begin(), freqs_hz.end());
  return std::max(*hi - *lo, floor_hz);
}

double channel_cost(const CostParams& params) {
  ensure(params.call_minutes > 0.0 && params.price_per_second > 0.0,
         "channel_cost: parameters must be positive");
  return params.call_minutes * 60.0 * params.price_per_second;
}

double channel_utility(double prob, double spread_hz, double cost, const SbacWeights& w) {
  ensure(prob >= 0.0 && prob <= 1.0, "channel_utility: prob outside [0, 1]");
  ensure(spread_hz > 0.0 && cost > 0.0, "channel_utility: spread and cost must be positive");
  return 10.0 * w.beta1 * prob + w.beta2 * std::log(w.spread_unit_hz / spread_hz) +
         w.beta3 / cost;
}

std::optional<int> select_best(std::span<const ScoredCandidate> candidates) {
  std::optional<int> best;
  double best_utility = 0.0;
  for (const ScoredCandidate& c : candidates) {
    if (!best || c.utility > best_utility ||
        (c.utility == best_utility && c.channel_id < *best)) {
      best = c.channel_id;
      best_utility = c.utility;
    }
  }
  return best;
}

std::vector<ScoredCandidate> score_candidates(std::span<const ChannelCandidate> candidates,
                                              const SbacWeights& weights, bool per_channel_prob,
                                              int universe_size) {
  std::vector<ScoredCandidate> scored;
  if (candidates.empty()) return scored;

  std::vector<double> freqs;
  freqs.reserve(candidates.size());
  int available = 0;
  for (const ChannelCandidate& c : candidates) {
    freqs.push_back(c.freq_hz);
    if (c.available_now) ++available;
  }
  const double spread = freq_spread(freqs, weights.spread_floor_hz);
  const double shared_prob = availability_prob(available, std::max(universe_size, 1));

  scored.reserve(candidates.size());
  for (const ChannelCandidate& c : candidates) {
    const double prob = per_channel_prob ? c.prob : shared_prob;
    scored.push_back({c.channel_id, channel_utility(prob, spread, c.cost, weights)});
  }
  return scored;
}

}  // namespace specshare
