#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "specshare/metrics.hpp"
#include "specshare/scenario.hpp"

namespace specshare {

struct RunOptions {
  bool collect_call_log = false;
  std::ostream* trace = nullptr;  // tab-separated message trace, one line per message
};

struct CallRecord {
  long id = 0;
  int provider = 0;
  int cell = 0;
  double arrival_time = 0.0;
  double holding_time = 0.0;
  double decision_time = 0.0;
  bool blocked = false;
  int channel = -1;  // -1 when blocked
};

// Per borrow episode: message counts and response delays measured from the
// instant the ChannelRequests were emitted.
struct EpisodeStats {
  int cell = 0;
  double start_time = 0.0;
  int requests_sent = 0;
  int broadcasts_sent = 0;
  int replies_sent = 0;
  int responses_received = 0;
  bool any_partial = false;
  std::vector<double> response_delays;
};

struct RunResult {
  MetricsReport report;
  std::vector<CallRecord> call_log;  // filled when collect_call_log
  std::vector<EpisodeStats> episodes;
  long events_processed = 0;
  uint64_t seed = 0;
};

// Executes one deterministic run: same scenario and seed give bit-identical
// results. InvariantFault aborts with a diagnostic state dump appended.
RunResult run(const Scenario& scenario, const RunOptions& options = {});

enum class SweepAxis { MeanArrival, Correlation, Sharing };

SweepAxis parse_axis(const std::string& name);  // ConfigError on unknown axis

struct SweepRow {
  double axis_value = 0.0;
  int replication = 0;
  uint64_t seed = 0;
  MetricsReport report;
};

// One run per (value, replication). Replication seeds derive from the base
// scenario seed and the replication index only, so runs at different axis
// values are seed-matched pairs. Runs execute independently (parallel when
// hardware allows); row order is deterministic.
std::vector<SweepRow> sweep(const Scenario& base, SweepAxis axis,
                            const std::vector<double>& values, int replications);

// CSV schema, exact column order:
//   scenario_id, axis_value, replication, seed, provider, r_bl_global, eta_s,
//   eta_s_user_weighted, c_e, n_blocked, n_processed, active_users_mean,
//   traffic_load_offered
// One row per provider per run plus a provider="ALL" aggregate row.
void write_csv_header(std::ostream& out);
void write_csv_rows(std::ostream& out, const std::string& scenario_id,
                    std::optional<double> axis_value, int replication, uint64_t seed,
                    const MetricsReport& report);

std::string format_number(double v);  // locale-independent, round-trip exact

}  // namespace specshare
