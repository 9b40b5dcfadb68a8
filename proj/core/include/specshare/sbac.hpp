#pragma once

#include <optional>
#include <span>
#include <vector>

namespace specshare {

// One channel offered to an overloaded base station.
struct ChannelCandidate {
  int channel_id = 0;
  double freq_hz = 0.0;
  bool available_now = true;
  double prob = 0.0;  // availability probability in [0, 1]
  double cost = 0.0;  // currency, > 0
};

struct SbacWeights {
  double beta1 = 1.0;  // availability term
  double beta2 = 1.0;  // frequency-spread term
  double beta3 = 1.0;  // cost term
  // The log argument is the spread divided by spread_unit_hz, so the utility
  // is dimensionless; spreads below spread_floor_hz are clamped up to it.
  double spread_unit_hz = 200e3;
  double spread_floor_hz = 200e3;
};

struct CostParams {
  double call_minutes = 3.0;      // expected call duration
  double price_per_second = 0.01;
};

struct ScoredCandidate {
  int channel_id = 0;
  double utility = 0.0;
};

double availability_prob(int available_count, int total_count);

// max - min over the candidate frequencies, clamped at floor_hz. One spread
// is computed for a whole candidate list and applied to every member.
double freq_spread(std::span<const double> freqs_hz, double floor_hz);

double channel_cost(const CostParams& params);

// 10*beta1*prob + beta2*ln(spread_unit/spread) + beta3/cost.
double channel_utility(double prob, double spread_hz, double cost, const SbacWeights& w);

// Argmax by utility, ties to the lowest channel id; empty list -> nullopt.
std::optional<int> select_best(std::span<const ScoredCandidate> candidates);

// Full scoring pipeline over a candidate list. In the default mode every
// candidate carries the global availability ratio available/universe_size;
// with per_channel_prob each candidate's own prob field (its recent free
// fraction) is used instead.
std::vector<ScoredCandidate> score_candidates(std::span<const ChannelCandidate> candidates,
                                              const SbacWeights& weights, bool per_channel_prob,
                                              int universe_size);

}  // namespace specshare
