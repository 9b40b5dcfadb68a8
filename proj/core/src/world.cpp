#include "specshare/world.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <string>

#include "specshare/errors.hpp"

namespace specshare {

namespace {

struct CornerKeyLess {
  bool operator()(const CornerKey& l, const CornerKey& r) const {
    return l.a != r.a ? l.a < r.a : l.b < r.b;
  }
};

}  // namespace

Topology build_topology(const TopologyParams& params, const ChannelPlan& plan,
                        const std::vector<double>& unit_prices) {
  require(params.n_providers >= 1, "topology: n_providers must be >= 1");
  require(params.cells_per_provider >= 1, "topology: cells_per_provider must be >= 1");
  require(params.cell_radius_m > 0.0, "topology: cell_radius_m must be > 0");
  require(static_cast<int>(plan.per_provider.size()) == params.n_providers,
          "topology: channel plan does not match provider count");
  require(plan.capacity >= 1, "topology: channel capacity must be >= 1");
  require(plan.base_freq_hz > 0.0 && plan.spacing_hz > 0.0,
          "topology: channel frequencies must be positive");
  require(static_cast<int>(unit_prices.size()) == params.n_providers,
          "topology: unit prices do not match provider count");
  for (double a : unit_prices) require(a > 0.0, "topology: unit price must be > 0");

  Topology topo;
  topo.params = params;
  if (topo.params.sensing_range_m <= 0.0) topo.params.sensing_range_m = params.cell_radius_m;
  const double radius = params.cell_radius_m;
  const double sensing_range = topo.params.sensing_range_m;

  // Channels: provider p's k-th channel sits at base + global_index * spacing.
  int next_channel = 0;
  for (int p = 0; p < params.n_providers; ++p) {
    ServiceProvider sp;
    sp.id = p;
    sp.unit_price = unit_prices[p];
    require(plan.per_provider[p] >= 0, "topology: negative channel count");
    for (int k = 0; k < plan.per_provider[p]; ++k) {
      Channel ch;
      ch.id = next_channel++;
      ch.owner = p;
      ch.center_freq_hz = plan.base_freq_hz + ch.id * plan.spacing_hz;
      ch.capacity = plan.capacity;
      sp.licensed_channels.push_back(ch.id);
      topo.channels.push_back(ch);
    }
    topo.providers.push_back(std::move(sp));
  }

  // One shared grid geometry; every provider gets a co-located copy.
  const std::vector<Axial> positions = spiral(params.cells_per_provider);
  for (int p = 0; p < params.n_providers; ++p) {
    for (int i = 0; i < params.cells_per_provider; ++i) {
      Cell cell;
      cell.id = static_cast<int>(topo.cells.size());
      cell.provider = p;
      cell.pos = positions[i];
      cell.center = hex_center(positions[i], radius);
      cell.radius = radius;
      topo.providers[p].cells.push_back(cell.id);
      topo.cells.push_back(std::move(cell));
    }
  }

  // Adjacency: same-provider hex neighbours. Conflict set: all cells at the
  // same or an adjacent grid position, any provider.
  std::map<std::pair<int, int>, std::vector<int>> by_pos;
  for (const Cell& c : topo.cells) by_pos[{c.pos.q, c.pos.r}].push_back(c.id);
  for (Cell& c : topo.cells) {
    for (int other : by_pos[{c.pos.q, c.pos.r}]) {
      if (other != c.id) c.conflict.push_back(other);
    }
    for (const Axial& d : kAxialDirections) {
      auto it = by_pos.find({c.pos.q + d.q, c.pos.r + d.r});
      if (it == by_pos.end()) continue;
      for (int other : it->second) {
        c.conflict.push_back(other);
        if (topo.cells[other].provider == c.provider) c.adjacent.push_back(other);
      }
    }
    std::sort(c.adjacent.begin(), c.adjacent.end());
    std::sort(c.conflict.begin(), c.conflict.end());
  }

  // CR nodes on hexagon corners, deduplicated on the exact corner lattice.
  std::map<CornerKey, int, CornerKeyLess> node_of_corner;
  std::map<int, std::vector<CornerKey>> corners_of_node;
  for (int i = 0; i < params.cells_per_provider; ++i) {
    for (int k = 0; k < 6; ++k) {
      const CornerKey key = hex_corner_key(positions[i], k);
      if (node_of_corner.find(key) == node_of_corner.end()) {
        CrNode node;
        node.id = static_cast<int>(topo.nodes.size());
        node.position = corner_position(key, radius);
        node.sensing_range = sensing_range;
        node_of_corner.emplace(key, node.id);
        topo.nodes.push_back(std::move(node));
      }
    }
  }
  for (Cell& c : topo.cells) {
    for (int k = 0; k < 6; ++k) {
      c.corner_nodes.push_back(node_of_corner.at(hex_corner_key(c.pos, k)));
    }
  }

  // Two corners are linked iff they span one hexagon edge: lattice offset
  // (0,+-2) or (+-1,+-1), and they share an incident cell.
  for (auto& [key, id] : node_of_corner) {
    static constexpr int kEdge[6][2] = {{0, 2}, {0, -2}, {1, 1}, {1, -1}, {-1, 1}, {-1, -1}};
    for (const auto& d : kEdge) {
      auto it = node_of_corner.find({key.a + d[0], key.b + d[1]});
      if (it != node_of_corner.end()) topo.nodes[id].neighbors.push_back(it->second);
    }
  }
  for (CrNode& node : topo.nodes) {
    std::vector<int> confirmed;
    for (int nb : node.neighbors) {
      bool share_cell = false;
      for (const Cell& c : topo.cells) {
        const auto& cn = c.corner_nodes;
        if (std::find(cn.begin(), cn.end(), node.id) != cn.end() &&
            std::find(cn.begin(), cn.end(), nb) != cn.end()) {
          share_cell = true;
          break;
        }
      }
      if (share_cell) confirmed.push_back(nb);
    }
    std::sort(confirmed.begin(), confirmed.end());
    confirmed.erase(std::unique(confirmed.begin(), confirmed.end()), confirmed.end());
    node.neighbors = std::move(confirmed);
  }

  // A cell is in range when its centre lies within the sensing disk.
  const double eps = 1e-9 * radius;
  for (CrNode& node : topo.nodes) {
    for (const Cell& c : topo.cells) {
      const double dx = node.position.x - c.center.x;
      const double dy = node.position.y - c.center.y;
      if (std::sqrt(dx * dx + dy * dy) <= node.sensing_range + eps) {
        node.cells_in_range.push_back(c.id);
      }
    }
  }

  return topo;
}

OccupancyState::OccupancyState(const Topology& topo)
    : topo_(&topo),
      counts_(static_cast<size_t>(topo.n_cells()) * static_cast<size_t>(topo.n_channels()), 0),
      channel_users_(topo.n_channels(), 0),
      channel_cells_(topo.n_channels(), 0) {}

int OccupancyState::index(int cell, int channel) const {
  ensure(cell >= 0 && cell < topo_->n_cells(), "occupancy: cell id out of range");
  ensure(channel >= 0 && channel < topo_->n_channels(), "occupancy: channel id out of range");
  return cell * topo_->n_channels() + channel;
}

int OccupancyState::count(int cell, int channel) const { return counts_[index(cell, channel)]; }

int OccupancyState::channel_users(int channel) const {
  ensure(channel >= 0 && channel < topo_->n_channels(), "occupancy: channel id out of range");
  return channel_users_[channel];
}

int OccupancyState::channel_active_cells(int channel) const {
  ensure(channel >= 0 && channel < topo_->n_channels(), "occupancy: channel id out of range");
  return channel_cells_[channel];
}

bool OccupancyState::admissible(int cell, int channel) const {
  if (count(cell, channel) >= topo_->channels[channel].capacity) return false;
  for (int other : topo_->cells[cell].conflict) {
    if (counts_[other * topo_->n_channels() + channel] > 0) return false;
  }
  return true;
}

void OccupancyState::occupy(int cell, int channel) {
  ensure(admissible(cell, channel),
         "occupy: channel " + std::to_string(channel) + " not admissible in cell " +
             std::to_string(cell));
  uint16_t& c = counts_[index(cell, channel)];
  if (c == 0) ++channel_cells_[channel];
  ++c;
  ++channel_users_[channel];
  ++total_users_;
}

void OccupancyState::release(int cell, int channel) {
  uint16_t& c = counts_[index(cell, channel)];
  ensure(c > 0, "release: no users on channel " + std::to_string(channel) + " in cell " +
                    std::to_string(cell));
  --c;
  if (c == 0) --channel_cells_[channel];
  --channel_users_[channel];
  --total_users_;
}

uint64_t OccupancyState::state_hash() const {
  uint64_t h = 1469598103934665603ULL;  // FNV-1a
  for (uint16_t c : counts_) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

}  // namespace specshare
