#pragma once

#include <optional>
#include <vector>

namespace specshare {

struct ProviderMetrics {
  int provider = 0;
  double eta_s = 0.0;                // busy-channel time / (owned channels * t_obs)
  double eta_s_user_weighted = 0.0;  // user time / (owned user slots * t_obs)
  double c_e = 0.0;                  // unit_price * t_obs * eta_s
  long n_blocked = 0;
  long n_processed = 0;
  double active_users_mean = 0.0;
  double offered_load_erlangs = 0.0; // decided-call rate * mean holding
};

struct MetricsReport {
  std::optional<double> r_bl;     // empty when no call was decided
  double r_bl_half_width_95 = 0.0;
  double t_obs = 0.0;             // post-warmup window length
  std::vector<ProviderMetrics> providers;
  ProviderMetrics total;          // provider == -1, pooled/summed
};

// Rectangle-integrates per-provider occupancy over the observation window
// [window_start, window_end]; decisions outside the window are not counted.
// All record_* calls must move forward in time.
class MetricsAccumulator {
 public:
  MetricsAccumulator(int n_providers, std::vector<int> owned_channels,
                     std::vector<long> owned_user_slots, double window_start, double window_end);

  void record_decision(int provider, bool blocked, double now);

  // New owner-side occupancy after an event: busy channel count and total
  // users on the provider's owned channels.
  void record_occupancy_change(int provider, int n_busy_channels, int n_users, double now);

  // In-service calls of the provider (by the call's provider, not the
  // channel owner).
  void record_active_calls(int provider, int n_active, double now);

  void finalize();  // integrate up to window_end

  std::optional<double> blocking_rate() const;
  double spectrum_efficiency(int provider) const;
  double revenue_efficiency(int provider, double unit_price) const;

  long blocked(int provider) const { return blocked_[provider]; }
  long processed(int provider) const { return processed_[provider]; }
  double t_obs() const { return window_end_ - window_start_; }

  MetricsReport report(const std::vector<double>& unit_prices, double mean_holding_s) const;

 private:
  double clip_span(double last, double now) const;
  void advance(int provider, double now);

  int n_providers_;
  std::vector<int> owned_channels_;
  std::vector<long> owned_user_slots_;
  double window_start_;
  double window_end_;

  std::vector<long> blocked_;
  std::vector<long> processed_;
  std::vector<int> busy_channels_;
  std::vector<int> users_on_owned_;
  std::vector<int> active_calls_;
  std::vector<double> busy_channel_time_;  // integral of busy channels dt
  std::vector<double> user_time_;          // integral of users on owned channels dt
  std::vector<double> active_call_time_;   // integral of in-service calls dt
  std::vector<double> last_event_;
  bool finalized_ = false;
};

}  // namespace specshare
