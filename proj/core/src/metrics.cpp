#include "specshare/metrics.hpp"

#include <algorithm>
#include <cmath>

#include "specshare/errors.hpp"

namespace specshare {

MetricsAccumulator::MetricsAccumulator(int n_providers, std::vector<int> owned_channels,
                                       std::vector<long> owned_user_slots, double window_start,
                                       double window_end)
    : n_providers_(n_providers),
      owned_channels_(std::move(owned_channels)),
      owned_user_slots_(std::move(owned_user_slots)),
      window_start_(window_start),
      window_end_(window_end),
      blocked_(n_providers, 0),
      processed_(n_providers, 0),
      busy_channels_(n_providers, 0),
      users_on_owned_(n_providers, 0),
      active_calls_(n_providers, 0),
      busy_channel_time_(n_providers, 0.0),
      user_time_(n_providers, 0.0),
      active_call_time_(n_providers, 0.0),
      last_event_(n_providers, 0.0) {
  ensure(n_providers >= 1, "metrics: provider count must be >= 1");
  ensure(window_end > window_start && window_start >= 0.0, "metrics: bad observation window");
  ensure(static_cast<int>(owned_channels_.size()) == n_providers &&
             static_cast<int>(owned_user_slots_.size()) == n_providers,
         "metrics: per-provider channel counts missing");
}

double MetricsAccumulator::clip_span(double last, double now) const {
  const double a = std::max(last, window_start_);
  const double b = std::min(now, window_end_);
  return b > a ? b - a : 0.0;
}

void MetricsAccumulator::advance(int provider, double now) {
  ensure(provider >= 0 && provider < n_providers_, "metrics: provider out of range");
  double& last = last_event_[provider];
  ensure(now >= last, "metrics: time regression");
  const double span = clip_span(last, now);
  if (span > 0.0) {
    busy_channel_time_[provider] += busy_channels_[provider] * span;
    user_time_[provider] += users_on_owned_[provider] * span;
    active_call_time_[provider] += active_calls_[provider] * span;
  }
  last = now;
}

void MetricsAccumulator::record_decision(int provider, bool blocked, double now) {
  advance(provider, now);
  if (now < window_start_ || now > window_end_) return;
  ++processed_[provider];
  if (blocked) ++blocked_[provider];
}

void MetricsAccumulator::record_occupancy_change(int provider, int n_busy_channels, int n_users,
                                                 double now) {
  advance(provider, now);
  ensure(n_busy_channels >= 0 && n_busy_channels <= owned_channels_[provider],
         "metrics: busy channels exceed owned channels");
  busy_channels_[provider] = n_busy_channels;
  users_on_owned_[provider] = n_users;
}

void MetricsAccumulator::record_active_calls(int provider, int n_active, double now) {
  advance(provider, now);
  ensure(n_active >= 0, "metrics: negative active calls");
  active_calls_[provider] = n_active;
}

void MetricsAccumulator::finalize() {
  for (int p = 0; p < n_providers_; ++p) advance(p, window_end_);
  finalized_ = true;
}

std::optional<double> MetricsAccumulator::blocking_rate() const {
  long blocked_total = 0;
  long processed_total = 0;
  for (int p = 0; p < n_providers_; ++p) {
    blocked_total += blocked_[p];
    processed_total += processed_[p];
  }
  if (processed_total == 0) return std::nullopt;
  return static_cast<double>(blocked_total) / static_cast<double>(processed_total);
}

double MetricsAccumulator::spectrum_efficiency(int provider) const {
  ensure(provider >= 0 && provider < n_providers_, "metrics: provider out of range");
  if (owned_channels_[provider] == 0) return 0.0;
  return busy_channel_time_[provider] / (owned_channels_[provider] * t_obs());
}

double MetricsAccumulator::revenue_efficiency(int provider, double unit_price) const {
  return unit_price * t_obs() * spectrum_efficiency(provider);
}

MetricsReport MetricsAccumulator::report(const std::vector<double>& unit_prices,
                                         double mean_holding_s) const {
  ensure(finalized_, "metrics: report requested before finalize");
  ensure(static_cast<int>(unit_prices.size()) == n_providers_,
         "metrics: unit price list mismatch");
  MetricsReport rep;
  rep.t_obs = t_obs();

  long blocked_total = 0;
  long processed_total = 0;
  double busy_time_total = 0.0;
  double user_time_total = 0.0;
  double active_time_total = 0.0;
  long channels_total = 0;
  long slots_total = 0;
  double c_e_total = 0.0;

  for (int p = 0; p < n_providers_; ++p) {
    ProviderMetrics m;
    m.provider = p;
    m.eta_s = spectrum_efficiency(p);
    m.eta_s_user_weighted =
        owned_user_slots_[p] > 0 ? user_time_[p] / (owned_user_slots_[p] * rep.t_obs) : 0.0;
    m.c_e = revenue_efficiency(p, unit_prices[p]);
    m.n_blocked = blocked_[p];
    m.n_processed = processed_[p];
    m.active_users_mean = active_call_time_[p] / rep.t_obs;
    m.offered_load_erlangs = processed_[p] / rep.t_obs * mean_holding_s;
    rep.providers.push_back(m);

    blocked_total += blocked_[p];
    processed_total += processed_[p];
    busy_time_total += busy_channel_time_[p];
    user_time_total += user_time_[p];
    active_time_total += active_call_time_[p];
    channels_total += owned_channels_[p];
    slots_total += owned_user_slots_[p];
    c_e_total += m.c_e;
  }

  rep.r_bl = blocking_rate();
  if (rep.r_bl && processed_total > 0) {
    const double p_hat = *rep.r_bl;
    rep.r_bl_half_width_95 = 1.96 * std::sqrt(p_hat * (1.0 - p_hat) / processed_total);
  }

  rep.total.provider = -1;
  rep.total.eta_s = channels_total > 0 ? busy_time_total / (channels_total * rep.t_obs) : 0.0;
  rep.total.eta_s_user_weighted =
      slots_total > 0 ? user_time_total / (slots_total * rep.t_obs) : 0.0;
  rep.total.c_e = c_e_total;
  rep.total.n_blocked = blocked_total;
  rep.total.n_processed = processed_total;
  rep.total.active_users_mean = active_time_total / rep.t_obs;
  rep.total.offered_load_erlangs = processed_total / rep.t_obs * mean_holding_s;
  return rep;
}

}  // namespace specshare
