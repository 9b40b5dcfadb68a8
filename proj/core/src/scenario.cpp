#include "specshare/scenario.hpp"

#include <cmath>

#include "specshare/errors.hpp"

namespace specshare {

namespace {

std::vector<double> broadcast(std::vector<double> v, int n, double fallback, const char* what) {
  if (v.empty()) v.assign(n, fallback);
  if (static_cast<int>(v.size()) == 1 && n > 1) v.assign(n, v[0]);
  require(static_cast<int>(v.size()) == n, std::string(what) + ": expected 1 or " +
                                               std::to_string(n) + " values");
  return v;
}

}  // namespace

Scenario normalize(const Scenario& input) {
  Scenario sc = input;
  const int n = sc.topology.n_providers;
  require(n >= 1, "scenario: n_providers must be >= 1");
  require(sc.duration_s > 0.0, "scenario: duration_s must be > 0");
  require(sc.warmup_fraction >= 0.0 && sc.warmup_fraction < 1.0,
          "scenario: warmup_fraction must lie in [0, 1)");

  if (sc.channels.per_provider.empty()) sc.channels.per_provider.assign(n, 5);
  if (static_cast<int>(sc.channels.per_provider.size()) == 1 && n > 1) {
    sc.channels.per_provider.assign(n, sc.channels.per_provider[0]);
  }
  require(static_cast<int>(sc.channels.per_provider.size()) == n,
          "scenario: channels.per_provider must give 1 or n_providers counts");
  for (int c : sc.channels.per_provider) require(c >= 0, "scenario: negative channel count");

  sc.unit_price = broadcast(sc.unit_price, n, 0.01, "scenario: unit_price");

  require(sc.traffic.mean_holding_s > 0.0, "scenario: mean_holding_s must be > 0");
  if (sc.traffic.mean_rates.empty()) {
    // Offered load sized so the expected concurrent-user total matches the
    // nominal population.
    require(sc.n_users_nominal > 0, "scenario: n_users_nominal must be > 0");
    const double rate = sc.n_users_nominal / (sc.traffic.mean_holding_s * n);
    sc.traffic.mean_rates.assign(n, rate);
  }
  if (static_cast<int>(sc.traffic.mean_rates.size()) == 1 && n > 1) {
    sc.traffic.mean_rates.assign(n, sc.traffic.mean_rates[0]);
  }
  require(static_cast<int>(sc.traffic.mean_rates.size()) == n,
          "scenario: traffic.mean_rates must give 1 or n_providers rates");
  sc.traffic.rate_std = broadcast(sc.traffic.rate_std, n, 0.0, "scenario: traffic.rate_std");
  if (!sc.traffic.covariance.empty()) {
    require(static_cast<int>(sc.traffic.covariance.size()) == n * n,
            "scenario: traffic.covariance must be n_providers x n_providers");
  }
  require(sc.traffic.rate_floor > 0.0, "scenario: traffic.rate_floor must be > 0");

  require(sc.sbac.beta1 >= 0.0 && sc.sbac.beta2 >= 0.0 && sc.sbac.beta3 >= 0.0,
          "scenario: sbac weights must be non-negative");
  require(sc.sbac.beta1 + sc.sbac.beta2 + sc.sbac.beta3 > 0.0,
          "scenario: sbac weights must not all be zero");
  require(sc.sbac.spread_unit_hz > 0.0 && sc.sbac.spread_floor_hz > 0.0,
          "scenario: sbac spread unit and floor must be > 0");
  require(sc.history_window >= 1, "scenario: history_window must be >= 1");
  require(sc.cost.call_minutes > 0.0 && sc.cost.price_per_second > 0.0,
          "scenario: cost parameters must be > 0");

  require(sc.protocol.message_latency_s > 0.0, "scenario: message_latency_s must be > 0");
  require(sc.protocol.reply_timeout_s > 0.0, "scenario: reply_timeout_s must be > 0");
  require(sc.protocol.sensing_period_s > 0.0, "scenario: sensing_period_s must be > 0");
  require(sc.protocol.pending_timeout_s > 0.0, "scenario: pending_timeout_s must be > 0");
  require(sc.protocol.sensing_false_free >= 0.0 && sc.protocol.sensing_false_free <= 1.0 &&
              sc.protocol.sensing_false_busy >= 0.0 && sc.protocol.sensing_false_busy <= 1.0,
          "scenario: sensing error probabilities must lie in [0, 1]");

  RateSampler validate_covariance(sc.traffic);  // surfaces non-PSD input at load time
  (void)validate_covariance;

  return sc;
}

}  // namespace specshare
