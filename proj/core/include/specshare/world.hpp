#pragma once

#include <cstdint>
#include <vector>

#include "specshare/geometry.hpp"

namespace specshare {

struct ServiceProvider {
  int id = 0;
  std::vector<int> licensed_channels;  // global channel ids, ascending
  double unit_price = 0.01;            // currency per second per channel
  std::vector<int> cells;
};

struct Channel {
  int id = 0;
  int owner = 0;
  double center_freq_hz = 0.0;
  int capacity = 10;  // max concurrent users
};

struct Cell {
  int id = 0;
  int provider = 0;
  Axial pos;
  Vec2 center;
  double radius = 0.0;
  std::vector<int> adjacent;      // same-provider hex neighbours
  std::vector<int> conflict;      // co-located and geometrically adjacent cells, all providers
  std::vector<int> corner_nodes;  // CR nodes on this cell's six corners
};

struct CrNode {
  int id = 0;
  Vec2 position;
  double sensing_range = 0.0;
  std::vector<int> neighbors;       // corner-adjacent CR nodes
  std::vector<int> cells_in_range;  // cells whose centre lies within sensing range
};

struct TopologyParams {
  int n_providers = 5;
  int cells_per_provider = 1;
  double cell_radius_m = 500.0;
  double sensing_range_m = 0.0;  // 0 -> cell radius
};

struct ChannelPlan {
  std::vector<int> per_provider;  // owned channel count per provider
  int capacity = 10;
  double base_freq_hz = 900e6;
  double spacing_hz = 200e3;
};

struct Topology {
  std::vector<ServiceProvider> providers;
  std::vector<Channel> channels;
  std::vector<Cell> cells;
  std::vector<CrNode> nodes;
  TopologyParams params;

  int n_channels() const { return static_cast<int>(channels.size()); }
  int n_cells() const { return static_cast<int>(cells.size()); }
};

// Builds the co-located hexagonal grids of all providers. Cells of every
// provider share one geometry (a spiral of hexagons around the origin); CR
// nodes sit on hexagon corners, deduplicated across cells and providers.
// Deterministic: same inputs give an identical topology.
Topology build_topology(const TopologyParams& params, const ChannelPlan& plan,
                        const std::vector<double>& unit_prices);

// Ground-truth channel occupancy. A channel is admissible in a cell iff its
// user count there is below capacity and no conflicting cell (co-located or
// adjacent, any provider) has users on it.
class OccupancyState {
 public:
  explicit OccupancyState(const Topology& topo);

  int count(int cell, int channel) const;
  int channel_users(int channel) const;       // all cells
  int channel_active_cells(int channel) const;
  int total_users() const { return total_users_; }

  bool admissible(int cell, int channel) const;

  // Both fault on precondition violations: occupy requires admissibility,
  // release a positive count.
  void occupy(int cell, int channel);
  void release(int cell, int channel);

  uint64_t state_hash() const;
  const Topology& topology() const { return *topo_; }

 private:
  int index(int cell, int channel) const;

  const Topology* topo_;
  std::vector<uint16_t> counts_;       // cell-major
  std::vector<int> channel_users_;
  std::vector<int> channel_cells_;     // cells with count > 0, per channel
  int total_users_ = 0;
};

}  // namespace specshare
