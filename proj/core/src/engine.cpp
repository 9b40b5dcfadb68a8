#include "specshare/engine.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <map>
#include <ostream>
#include <queue>
#include <sstream>
#include <thread>
#include <variant>

#include "specshare/errors.hpp"
#include "specshare/rng.hpp"

namespace specshare {

namespace {

// Stream keys: one generator per (purpose, provider) so event reordering in
// one stream never perturbs another.
enum StreamPurpose : uint64_t {
  kStreamRates = 1,
  kStreamArrival = 2,
  kStreamHolding = 3,
  kStreamCellAssign = 4,
  kStreamSensingError = 5,
};

// Kind priority at equal timestamps: freed capacity must be visible to
// same-instant arrivals.
enum EvPriority : int {
  kDeparture = 0,
  kDelivery = 1,
  kSenseSweep = 2,
  kArrival = 3,
  kRateRedraw = 4,
  kEndOfRun = 5,
};

struct ArrivalEv {
  int provider;
  long generation;
};
struct DepartureEv {
  long call_id;
  int provider;
  int cell;
  int channel;
};
struct SweepEv {};
struct DeliveryEv {
  Message msg;
};
struct ReplyTimeoutEv {
  int node;
  long request_id;
};
struct PendingTimeoutEv {
  long call_id;
  int cell;
};
struct RedrawEv {};
struct EndEv {};

using Payload = std::variant<ArrivalEv, DepartureEv, SweepEv, DeliveryEv, ReplyTimeoutEv,
                             PendingTimeoutEv, RedrawEv, EndEv>;

struct Event {
  double time;
  int priority;
  uint64_t sequence;
  Payload payload;
};

struct EventAfter {
  bool operator()(const Event& a, const Event& b) const {
    if (a.time != b.time) return a.time > b.time;
    if (a.priority != b.priority) return a.priority > b.priority;
    return a.sequence > b.sequence;
  }
};

struct CallInfo {
  int provider;
  int cell;
  double arrival_time;
  double holding_time;
  bool pending = false;
};

class Simulation {
 public:
  Simulation(const Scenario& scenario, const RunOptions& options)
      : sc_(normalize(scenario)),
        opts_(options),
        topo_(build_topology(sc_.topology, sc_.channels, sc_.unit_price)),
        occ_(topo_),
        sampler_(sc_.traffic),
        rates_rng_(sc_.seed, kStreamRates, 0),
        sense_rng_(sc_.seed, kStreamSensingError, 0),
        metrics_(sc_.topology.n_providers, owned_channel_counts(), owned_user_slots(),
                 sc_.warmup_fraction * sc_.duration_s, sc_.duration_s) {
    const int n = sc_.topology.n_providers;
    for (int p = 0; p < n; ++p) {
      arrival_rng_.emplace_back(sc_.seed, kStreamArrival, static_cast<uint64_t>(p));
      holding_rng_.emplace_back(sc_.seed, kStreamHolding, static_cast<uint64_t>(p));
      cell_rng_.emplace_back(sc_.seed, kStreamCellAssign, static_cast<uint64_t>(p));
    }
    arrivals_.assign(n, 0);
    blocked_.assign(n, 0);
    admitted_.assign(n, 0);
    completed_.assign(n, 0);
    serving_.assign(n, 0);
    pending_.assign(n, 0);
    busy_channels_.assign(n, 0);
    users_on_owned_.assign(n, 0);
    arrival_gen_.assign(n, 0);

    for (const Cell& cell : topo_.cells) bs_.emplace_back(cell.id, cell.provider);
    for (const CrNode& node : topo_.nodes) {
      cr_.emplace_back(node.id, topo_.n_channels(), sc_.history_window);
    }
  }

  RunResult run() {
    try {
      init_schedule();
      loop();
    } catch (const InvariantFault& fault) {
      throw InvariantFault(std::string(fault.what()) + "\n" + diagnostic_dump());
    }
    metrics_.finalize();
    RunResult result;
    result.report = metrics_.report(sc_.unit_price, sc_.traffic.mean_holding_s);
    result.call_log = std::move(call_log_);
    result.episodes = std::move(episodes_);
    result.events_processed = events_processed_;
    result.seed = sc_.seed;
    return result;
  }

 private:
  std::vector<int> owned_channel_counts() const {
    std::vector<int> counts;
    for (const ServiceProvider& sp : topo_.providers) {
      counts.push_back(static_cast<int>(sp.licensed_channels.size()));
    }
    return counts;
  }

  std::vector<long> owned_user_slots() const {
    std::vector<long> slots;
    for (const ServiceProvider& sp : topo_.providers) {
      long total = 0;
      for (int ch : sp.licensed_channels) total += topo_.channels[ch].capacity;
      slots.push_back(total);
    }
    return slots;
  }

  void schedule(double time, int priority, Payload payload) {
    queue_.push(Event{time, priority, next_sequence_++, std::move(payload)});
  }

  void schedule_message(Message msg, double now) {
    tally_sent(msg);
    msg.timestamp = now;
    schedule(now + sc_.protocol.message_latency_s, kDelivery, DeliveryEv{std::move(msg)});
  }

  void init_schedule() {
    rates_ = sampler_.sample(rates_rng_);
    for (int p = 0; p < sc_.topology.n_providers; ++p) schedule_next_arrival(p);
    if (sc_.traffic.epoch_length_s > 0.0 && sc_.traffic.epoch_length_s < sc_.duration_s) {
      schedule(sc_.traffic.epoch_length_s, kRateRedraw, RedrawEv{});
    }
    if (sc_.sharing_enabled) schedule(0.0, kSenseSweep, SweepEv{});
    schedule(sc_.duration_s, kEndOfRun, EndEv{});
  }

  void loop() {
    while (!queue_.empty()) {
      Event ev = queue_.top();
      queue_.pop();
      ensure(ev.time >= now_, "engine: event time regression");
      now_ = ev.time;
      ++events_processed_;
      if (std::holds_alternative<EndEv>(ev.payload)) return;  // in-flight events dropped
      std::visit([this](auto& p) { handle(p); }, ev.payload);
      check_conservation();
    }
    ensure(false, "engine: event queue drained without EndOfRun");
  }

  void schedule_next_arrival(int provider) {
    const double t = next_arrival(rates_[provider], now_, arrival_rng_[provider]);
    if (t <= sc_.duration_s) {
      schedule(t, kArrival, ArrivalEv{provider, arrival_gen_[provider]});
    }
  }

  void handle(ArrivalEv& ev) {
    if (ev.generation != arrival_gen_[ev.provider]) return;  // superseded by a rate redraw
    schedule_next_arrival(ev.provider);

    const int p = ev.provider;
    const auto& cells = topo_.providers[p].cells;
    const int cell = cells[cell_rng_[p].uniform_int(static_cast<int>(cells.size()))];
    const double holding = draw_holding(sc_.traffic.mean_holding_s, holding_rng_[p]);
    const long call_id = next_call_id_++;
    calls_.emplace(call_id, CallInfo{p, cell, now_, holding});
    ++arrivals_[p];

    trace_message(MessageKind::ServiceRequest, {NodeRef::Kind::Mobile, static_cast<int>(call_id)},
                  {NodeRef::Kind::BaseStation, cell}, "call=" + std::to_string(call_id));
    decide_admission(call_id);
  }

  void decide_admission(long call_id) {
    CallInfo& info = calls_.at(call_id);
    BsState& bs = bs_[info.cell];
    if (auto ch = bs.first_admissible_owned(occ_, topo_)) {
      grant(call_id, *ch);
      return;
    }
    if (auto ch = bs.first_admissible_borrowed(occ_)) {
      grant(call_id, *ch);
      return;
    }
    if (!sc_.sharing_enabled) {
      block(call_id);
      return;
    }
    info.pending = true;
    ++pending_[info.provider];
    if (bs.has_pending()) {
      bs.enqueue_pending_call(call_id);  // duplicate trigger suppressed
    } else {
      const long request_id = next_request_id_++;
      std::vector<Message> requests = bs.handle_overload(topo_, request_id, call_id, now_);
      EpisodeStats stats;
      stats.cell = info.cell;
      stats.start_time = now_;
      episode_index_[request_id] = episodes_.size();
      episodes_.push_back(stats);
      for (Message& msg : requests) schedule_message(std::move(msg), now_);
    }
    schedule(now_ + sc_.protocol.pending_timeout_s, kDelivery,
             PendingTimeoutEv{call_id, info.cell});
  }

  void grant(long call_id, int channel) {
    CallInfo info = calls_.at(call_id);
    occ_.occupy(info.cell, channel);
    on_channel_users_changed(channel);

    const int p = info.provider;
    if (info.pending) --pending_[p];
    ++admitted_[p];
    ++serving_[p];
    metrics_.record_decision(p, false, now_);
    metrics_.record_active_calls(p, serving_[p], now_);

    const double departure = now_ + info.holding_time;
    if (departure <= sc_.duration_s) {
      schedule(departure, kDeparture, DepartureEv{call_id, p, info.cell, channel});
    }
    trace_message(MessageKind::ServiceReply, {NodeRef::Kind::BaseStation, info.cell},
                  {NodeRef::Kind::Mobile, static_cast<int>(call_id)},
                  "grant=ch" + std::to_string(channel));
    if (opts_.collect_call_log) {
      call_log_.push_back({call_id, p, info.cell, info.arrival_time, info.holding_time, now_,
                           false, channel});
    }
    calls_.erase(call_id);
  }

  void block(long call_id) {
    CallInfo info = calls_.at(call_id);
    const int p = info.provider;
    if (info.pending) --pending_[p];
    ++blocked_[p];
    metrics_.record_decision(p, true, now_);
    trace_message(MessageKind::ServiceReply, {NodeRef::Kind::BaseStation, info.cell},
                  {NodeRef::Kind::Mobile, static_cast<int>(call_id)}, "blocked");
    if (opts_.collect_call_log) {
      call_log_.push_back({call_id, p, info.cell, info.arrival_time, info.holding_time, now_,
                           true, -1});
    }
    calls_.erase(call_id);
  }

  void handle(DepartureEv& ev) {
    occ_.release(ev.cell, ev.channel);
    on_channel_users_changed(ev.channel);
    --serving_[ev.provider];
    ++completed_[ev.provider];
    metrics_.record_active_calls(ev.provider, serving_[ev.provider], now_);
    bs_[ev.cell].release_borrowed(occ_, topo_);
  }

  void handle(SweepEv&) {
    for (const CrNode& node : topo_.nodes) {
      cr_[node.id].sense_sweep(occ_, node.cells_in_range, now_,
                               sc_.protocol.sensing_false_free,
                               sc_.protocol.sensing_false_busy, &sense_rng_);
    }
    const double next = now_ + sc_.protocol.sensing_period_s;
    if (next <= sc_.duration_s) schedule(next, kSenseSweep, SweepEv{});
  }

  void handle(RedrawEv&) {
    rates_ = sampler_.sample(rates_rng_);
    for (int p = 0; p < sc_.topology.n_providers; ++p) {
      ++arrival_gen_[p];  // pending arrival of the old epoch becomes stale
      schedule_next_arrival(p);
    }
    const double next = now_ + sc_.traffic.epoch_length_s;
    if (next < sc_.duration_s) schedule(next, kRateRedraw, RedrawEv{});
  }

  void handle(EndEv&) { ensure(false, "engine: EndOfRun reached the dispatcher"); }

  void handle(ReplyTimeoutEv& ev) {
    CrEmission out = cr_[ev.node].handle_reply_timeout(ev.request_id, topo_, now_);
    for (Message& msg : out.messages) schedule_message(std::move(msg), now_);
  }

  void handle(PendingTimeoutEv& ev) {
    auto it = calls_.find(ev.call_id);
    if (it == calls_.end() || !it->second.pending) return;  // already decided
    bs_[ev.cell].remove_pending_call(ev.call_id);
    block(ev.call_id);
  }

  void handle(DeliveryEv& ev) {
    const Message& msg = ev.msg;
    trace_delivery(msg);
    switch (msg.kind) {
      case MessageKind::ChannelRequest: {
        const int node = msg.dst.index;
        CrEmission out = cr_[node].handle_channel_request(msg, topo_.nodes[node], topo_, now_);
        for (Message& m : out.messages) schedule_message(std::move(m), now_);
        if (out.arm_reply_timer) {
          schedule(now_ + sc_.protocol.reply_timeout_s, kDelivery,
                   ReplyTimeoutEv{node, out.timer_request_id});
        }
        break;
      }
      case MessageKind::NeighborBroadcast: {
        CrEmission out = cr_[msg.dst.index].handle_neighbor_broadcast(msg, msg.dst.index, now_);
        for (Message& m : out.messages) schedule_message(std::move(m), now_);
        break;
      }
      case MessageKind::NeighborReply: {
        CrEmission out = cr_[msg.dst.index].handle_neighbor_reply(msg, topo_, now_);
        for (Message& m : out.messages) schedule_message(std::move(m), now_);
        break;
      }
      case MessageKind::AvailabilityResponse: {
        BsState& bs = bs_[msg.dst.index];
        ensure(bs.has_pending() && bs.pending_request_id() == msg.request_id,
               "engine: availability response without a pending request");
        auto ep = episode_index_.find(msg.request_id);
        if (ep != episode_index_.end()) {
          EpisodeStats& stats = episodes_[ep->second];
          ++stats.responses_received;
          stats.any_partial = stats.any_partial || msg.partial;
          stats.response_delays.push_back(now_ - stats.start_time);
        }
        if (bs.handle_availability_response(msg)) decide_episode(bs);
        break;
      }
      case MessageKind::ServiceRequest:
      case MessageKind::ServiceReply:
        ensure(false, "engine: service messages are not scheduled");
    }
  }

  void decide_episode(BsState& bs) {
    int universe = 0;
    std::vector<ChannelCandidate> candidates =
        bs.collect_candidates(topo_, channel_cost(sc_.cost), &universe);
    std::vector<ScoredCandidate> scored =
        score_candidates(candidates, sc_.sbac, sc_.per_channel_prob, universe);

    for (long call_id : bs.take_pending_calls()) {
      if (auto ch = bs.first_admissible_owned(occ_, topo_)) {
        grant(call_id, *ch);
        continue;
      }
      if (auto ch = bs.first_admissible_borrowed(occ_)) {
        grant(call_id, *ch);
        continue;
      }
      // Availability snapshots can be one sweep old; recheck at grant time
      // and retry once against the next-best candidate.
      bool granted = false;
      for (int attempt = 0; attempt < 2 && !granted; ++attempt) {
        const std::optional<int> best = select_best(scored);
        if (!best) break;
        scored.erase(std::find_if(scored.begin(), scored.end(),
                                  [&](const ScoredCandidate& c) { return c.channel_id == *best; }));
        if (occ_.admissible(bs.cell(), *best)) {
          bs.register_borrowed(*best);
          grant(call_id, *best);
          granted = true;
        }
      }
      if (!granted) block(call_id);
    }
    bs.close_episode();
  }

  // Owner-side busy bookkeeping after any occupy/release on `channel`.
  void on_channel_users_changed(int channel) {
    const int owner = topo_.channels[channel].owner;
    int busy = 0;
    int users = 0;
    for (int ch : topo_.providers[owner].licensed_channels) {
      const int u = occ_.channel_users(ch);
      users += u;
      if (u > 0) ++busy;
    }
    busy_channels_[owner] = busy;
    users_on_owned_[owner] = users;
    metrics_.record_occupancy_change(owner, busy, users, now_);
  }

  void check_conservation() {
    int serving_total = 0;
    for (int p = 0; p < sc_.topology.n_providers; ++p) {
      ensure(arrivals_[p] == blocked_[p] + admitted_[p] + pending_[p],
             "engine: arrival conservation violated for provider " + std::to_string(p));
      ensure(admitted_[p] == completed_[p] + serving_[p],
             "engine: admission conservation violated for provider " + std::to_string(p));
      serving_total += serving_[p];
    }
    ensure(occ_.total_users() == serving_total,
           "engine: occupancy does not match in-service call count");
  }

  void tally_sent(const Message& msg) {
    auto it = episode_index_.find(msg.request_id);
    if (it == episode_index_.end()) return;
    EpisodeStats& stats = episodes_[it->second];
    switch (msg.kind) {
      case MessageKind::ChannelRequest: ++stats.requests_sent; break;
      case MessageKind::NeighborBroadcast: ++stats.broadcasts_sent; break;
      case MessageKind::NeighborReply: ++stats.replies_sent; break;
      default: break;
    }
  }

  void trace_delivery(const Message& msg) {
    if (opts_.trace == nullptr) return;
    std::string summary;
    switch (msg.kind) {
      case MessageKind::ChannelRequest:
        summary = "req=" + std::to_string(msg.request_id);
        break;
      case MessageKind::NeighborBroadcast:
        summary = "req=" + std::to_string(msg.request_id);
        break;
      case MessageKind::NeighborReply:
      case MessageKind::AvailabilityResponse: {
        int avail = 0;
        for (const AvailabilityEntry& e : msg.payload) avail += e.available ? 1 : 0;
        summary = "req=" + std::to_string(msg.request_id) + " channels=" +
                  std::to_string(msg.payload.size()) + " avail=" + std::to_string(avail);
        if (msg.partial) summary += " partial";
        break;
      }
      default: break;
    }
    write_trace_line(msg.kind, msg.src, msg.dst, summary);
  }

  void trace_message(MessageKind kind, NodeRef src, NodeRef dst, const std::string& summary) {
    if (opts_.trace == nullptr) return;
    write_trace_line(kind, src, dst, summary);
  }

  void write_trace_line(MessageKind kind, NodeRef src, NodeRef dst, const std::string& summary) {
    *opts_.trace << format_number(now_) << '\t' << message_kind_name(kind) << '\t'
                 << node_ref_name(src) << '\t' << node_ref_name(dst) << '\t' << summary << '\n';
  }

  std::string diagnostic_dump() const {
    std::ostringstream out;
    out << "diagnostic state dump\n";
    out << "  time=" << format_number(now_) << " events=" << events_processed_ << "\n";
    for (int p = 0; p < sc_.topology.n_providers; ++p) {
      out << "  provider " << p << ": arrivals=" << arrivals_[p] << " blocked=" << blocked_[p]
          << " admitted=" << admitted_[p] << " completed=" << completed_[p]
          << " serving=" << serving_[p] << " pending=" << pending_[p] << "\n";
    }
    out << "  occupied (cell, channel, users):";
    for (int cell = 0; cell < topo_.n_cells(); ++cell) {
      for (int ch = 0; ch < topo_.n_channels(); ++ch) {
        if (occ_.count(cell, ch) > 0) {
          out << " (" << cell << "," << ch << "," << occ_.count(cell, ch) << ")";
        }
      }
    }
    out << "\n";
    return out.str();
  }

  Scenario sc_;
  RunOptions opts_;
  Topology topo_;
  OccupancyState occ_;
  RateSampler sampler_;
  Rng rates_rng_;
  Rng sense_rng_;
  MetricsAccumulator metrics_;

  std::vector<Rng> arrival_rng_;
  std::vector<Rng> holding_rng_;
  std::vector<Rng> cell_rng_;
  std::vector<double> rates_;
  std::vector<long> arrival_gen_;

  std::vector<BsState> bs_;
  std::vector<CrNodeState> cr_;

  std::priority_queue<Event, std::vector<Event>, EventAfter> queue_;
  uint64_t next_sequence_ = 0;
  double now_ = 0.0;
  long events_processed_ = 0;
  long next_call_id_ = 0;
  long next_request_id_ = 0;

  std::map<long, CallInfo> calls_;  // undecided or in-service bookkeeping lives in events
  std::vector<long> arrivals_, blocked_, admitted_, completed_;
  std::vector<int> serving_, pending_;
  std::vector<int> busy_channels_, users_on_owned_;

  std::vector<CallRecord> call_log_;
  std::vector<EpisodeStats> episodes_;
  std::map<long, size_t> episode_index_;
};

}  // namespace

RunResult run(const Scenario& scenario, const RunOptions& options) {
  Simulation sim(scenario, options);
  return sim.run();
}

SweepAxis parse_axis(const std::string& name) {
  if (name == "mean_arrival") return SweepAxis::MeanArrival;
  if (name == "correlation") return SweepAxis::Correlation;
  if (name == "sharing") return SweepAxis::Sharing;
  throw ConfigError("unknown sweep axis: " + name +
                    " (expected mean_arrival, correlation or sharing)");
}

namespace {

Scenario apply_axis(const Scenario& base, SweepAxis axis, double value) {
  Scenario sc = base;
  switch (axis) {
    case SweepAxis::MeanArrival: {
      require(value > 0.0, "sweep: mean_arrival values must be > 0");
      // Per-provider load shape is preserved: rates scale so their mean
      // equals the axis value.
      double mean = 0.0;
      for (double r : sc.traffic.mean_rates) mean += r;
      mean /= static_cast<double>(sc.traffic.mean_rates.size());
      ensure(mean > 0.0, "sweep: base scenario has zero mean rate");
      for (double& r : sc.traffic.mean_rates) r *= value / mean;
      break;
    }
    case SweepAxis::Correlation:
      require(base.traffic.covariance.empty(),
              "sweep: correlation axis requires the scalar correlation model");
      sc.traffic.correlation = value;
      break;
    case SweepAxis::Sharing:
      require(value == 0.0 || value == 1.0, "sweep: sharing values must be 0 or 1");
      sc.sharing_enabled = value != 0.0;
      break;
  }
  return sc;
}

}  // namespace

std::vector<SweepRow> sweep(const Scenario& base, SweepAxis axis,
                            const std::vector<double>& values, int replications) {
  require(!values.empty(), "sweep: no axis values given");
  require(replications >= 1, "sweep: replications must be >= 1");
  const Scenario normalized = normalize(base);

  struct Job {
    Scenario scenario;
    double axis_value;
    int replication;
  };
  std::vector<Job> jobs;
  for (double value : values) {
    Scenario point = apply_axis(normalized, axis, value);
    for (int rep = 0; rep < replications; ++rep) {
      Job job{point, value, rep};
      // Seeds depend on the replication only: runs at different axis values
      // form matched pairs under common random numbers.
      job.scenario.seed = Rng::mix(normalized.seed ^ Rng::mix(static_cast<uint64_t>(rep) + 1));
      jobs.push_back(std::move(job));
    }
  }

  std::vector<SweepRow> rows(jobs.size());
  const unsigned hw = std::thread::hardware_concurrency();
  const unsigned n_threads = std::max(1u, std::min<unsigned>(hw, jobs.size()));

  std::exception_ptr first_error;
  std::atomic<size_t> next{0};
  std::atomic<bool> failed{false};
  auto worker = [&]() {
    while (!failed.load()) {
      const size_t i = next.fetch_add(1);
      if (i >= jobs.size()) return;
      try {
        RunResult result = run(jobs[i].scenario, RunOptions{});
        rows[i] = SweepRow{jobs[i].axis_value, jobs[i].replication, jobs[i].scenario.seed,
                           std::move(result.report)};
      } catch (...) {
        if (!failed.exchange(true)) first_error = std::current_exception();
        return;
      }
    }
  };

  if (n_threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < n_threads; ++t) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
  }
  if (failed.load()) std::rethrow_exception(first_error);
  return rows;
}

std::string format_number(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  ensure(ec == std::errc(), "format_number: conversion failed");
  return std::string(buf, ptr);
}

void write_csv_header(std::ostream& out) {
  out << "scenario_id,axis_value,replication,seed,provider,r_bl_global,eta_s,"
         "eta_s_user_weighted,c_e,n_blocked,n_processed,active_users_mean,"
         "traffic_load_offered\n";
}

namespace {

void write_csv_row(std::ostream& out, const std::string& scenario_id, const std::string& axis,
                   int replication, uint64_t seed, const std::string& provider, double r_bl,
                   const ProviderMetrics& m) {
  out << scenario_id << ',' << axis << ',' << replication << ',' << seed << ',' << provider
      << ',' << format_number(r_bl) << ',' << format_number(m.eta_s) << ','
      << format_number(m.eta_s_user_weighted) << ',' << format_number(m.c_e) << ','
      << m.n_blocked << ',' << m.n_processed << ',' << format_number(m.active_users_mean) << ','
      << format_number(m.offered_load_erlangs) << '\n';
}

}  // namespace

void write_csv_rows(std::ostream& out, const std::string& scenario_id,
                    std::optional<double> axis_value, int replication, uint64_t seed,
                    const MetricsReport& report) {
  const std::string axis = axis_value ? format_number(*axis_value) : std::string();
  const double r_bl = report.r_bl.value_or(std::nan(""));
  for (const ProviderMetrics& m : report.providers) {
    write_csv_row(out, scenario_id, axis, replication, seed, std::to_string(m.provider), r_bl, m);
  }
  write_csv_row(out, scenario_id, axis, replication, seed, "ALL", r_bl, report.total);
}

}  // namespace specshare
