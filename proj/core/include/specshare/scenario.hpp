#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "specshare/protocol.hpp"
#include "specshare/sbac.hpp"
#include "specshare/traffic.hpp"
#include "specshare/world.hpp"

namespace specshare {

struct Scenario {
  std::string id = "scenario";
  uint64_t seed = 0;
  double duration_s = 3600.0;
  double warmup_fraction = 0.1;
  bool sharing_enabled = true;

  TopologyParams topology;
  ChannelPlan channels;            // per_provider empty -> 5 channels each
  std::vector<double> unit_price;  // per provider; empty -> 0.01, scalar broadcast

  // mean_rates empty -> sized so the expected concurrent-user total matches
  // n_users_nominal.
  TrafficModel traffic;
  int n_users_nominal = 100;

  SbacWeights sbac;
  bool per_channel_prob = false;
  int history_window = 20;
  CostParams cost;

  ProtocolTimings protocol;
};

// Resolves broadcast/defaulted fields and validates everything that does not
// need the topology built. ConfigError on inconsistent input.
Scenario normalize(const Scenario& sc);

}  // namespace specshare
