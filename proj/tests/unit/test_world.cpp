#include <algorithm>
#include <cmath>
#include <set>
#include <vector>

#include <doctest.h>

#include "specshare/errors.hpp"
#include "specshare/rng.hpp"
#include "specshare/world.hpp"

using namespace specshare;

namespace {

Topology make(int providers, int cells, double radius = 500.0, int per_provider = 2,
              int capacity = 10) {
  TopologyParams params;
  params.n_providers = providers;
  params.cells_per_provider = cells;
  params.cell_radius_m = radius;
  ChannelPlan plan;
  plan.per_provider.assign(providers, per_provider);
  plan.capacity = capacity;
  return build_topology(params, plan, std::vector<double>(providers, 0.01));
}

// Independent corner enumeration for a one-ring flower: centres from the
// axial->cartesian formula, six corners each, pairwise deduplication.
int brute_force_corner_count(double radius) {
  std::vector<std::pair<double, double>> centers;
  for (int q = -1; q <= 1; ++q) {
    for (int r = -1; r <= 1; ++r) {
      if (std::abs(q + r) > 1) continue;  // hex distance > 1
      centers.push_back({radius * std::sqrt(3.0) * (q + r / 2.0), radius * 1.5 * r});
    }
  }
  REQUIRE(centers.size() == 7);
  std::vector<std::pair<double, double>> corners;
  for (auto [cx, cy] : centers) {
    for (int k = 0; k < 6; ++k) {
      const double ang = (30.0 + 60.0 * k) * M_PI / 180.0;
      corners.push_back({cx + radius * std::cos(ang), cy + radius * std::sin(ang)});
    }
  }
  std::vector<std::pair<double, double>> unique;
  for (auto& c : corners) {
    bool seen = false;
    for (auto& u : unique) {
      if (std::hypot(c.first - u.first, c.second - u.second) < 1e-6 * radius) {
        seen = true;
        break;
      }
    }
    if (!seen) unique.push_back(c);
  }
  return static_cast<int>(unique.size());
}

}  // namespace

TEST_CASE("single hexagon: six CR nodes, two ring neighbours each") {
  const Topology topo = make(1, 1);
  CHECK(topo.cells.size() == 1);
  CHECK(topo.nodes.size() == 6);
  for (const CrNode& node : topo.nodes) {
    CHECK(node.neighbors.size() == 2);
    for (int nb : node.neighbors) {
      const double d = std::hypot(node.position.x - topo.nodes[nb].position.x,
                                  node.position.y - topo.nodes[nb].position.y);
      CHECK(d == doctest::Approx(500.0));
      // symmetry
      const auto& back = topo.nodes[nb].neighbors;
      CHECK(std::find(back.begin(), back.end(), node.id) != back.end());
    }
    REQUIRE(node.cells_in_range.size() == 1);
    CHECK(node.cells_in_range[0] == 0);
  }
  CHECK(topo.cells[0].corner_nodes.size() == 6);
}

TEST_CASE("seven-cell flower: the centre cell has six adjacent cells") {
  const Topology topo = make(1, 7);
  CHECK(topo.cells.size() == 7);
  CHECK(topo.cells[0].adjacent.size() == 6);
  for (const Cell& c : topo.cells) {
    // adjacency symmetric and irreflexive
    for (int other : c.adjacent) {
      CHECK(other != c.id);
      const auto& back = topo.cells[other].adjacent;
      CHECK(std::find(back.begin(), back.end(), c.id) != back.end());
    }
  }
}

TEST_CASE("co-located providers share one CR vertex set") {
  const Topology five = make(5, 7);
  CHECK(five.cells.size() == 35);
  const int oracle = brute_force_corner_count(500.0);
  CHECK(oracle == 24);  // Euler: V = E - F + 2 = 30 - 8 + 2
  CHECK(static_cast<int>(five.nodes.size()) == oracle);
  const Topology one = make(1, 7);
  CHECK(one.nodes.size() == five.nodes.size());
}

TEST_CASE("channel plan: frequencies distinct and ownership exclusive") {
  const Topology topo = make(3, 1, 500.0, 4);
  CHECK(topo.channels.size() == 12);
  std::set<double> freqs;
  std::set<int> owned;
  for (const Channel& ch : topo.channels) {
    freqs.insert(ch.center_freq_hz);
    CHECK(ch.center_freq_hz == doctest::Approx(900e6 + ch.id * 200e3));
  }
  CHECK(freqs.size() == topo.channels.size());
  for (const ServiceProvider& sp : topo.providers) {
    for (int ch : sp.licensed_channels) {
      CHECK(topo.channels[ch].owner == sp.id);
      CHECK(owned.insert(ch).second);  // disjoint across providers
    }
  }
}

TEST_CASE("invalid topology parameters are configuration errors") {
  TopologyParams params;
  params.n_providers = 0;
  ChannelPlan plan;
  CHECK_THROWS_AS(build_topology(params, plan, {}), ConfigError);
  params.n_providers = 1;
  params.cell_radius_m = -1.0;
  plan.per_provider = {2};
  CHECK_THROWS_AS(build_topology(params, plan, {0.01}), ConfigError);
}

TEST_CASE("occupy and release maintain counts and invert exactly") {
  const Topology topo = make(1, 1, 500.0, 2, 3);
  OccupancyState occ(topo);
  const uint64_t empty_hash = occ.state_hash();

  occ.occupy(0, 0);
  CHECK(occ.count(0, 0) == 1);
  CHECK(occ.channel_users(0) == 1);
  CHECK(occ.total_users() == 1);
  occ.release(0, 0);
  CHECK(occ.state_hash() == empty_hash);
  CHECK(occ.total_users() == 0);
}

TEST_CASE("occupy past capacity and empty release fault") {
  const Topology topo = make(1, 1, 500.0, 1, 2);
  OccupancyState occ(topo);
  occ.occupy(0, 0);
  occ.occupy(0, 0);
  CHECK(!occ.admissible(0, 0));
  CHECK_THROWS_AS(occ.occupy(0, 0), InvariantFault);
  occ.release(0, 0);
  occ.release(0, 0);
  CHECK_THROWS_AS(occ.release(0, 0), InvariantFault);
}

TEST_CASE("co-channel rule blocks adjacent cells but not two-ring cells") {
  const Topology topo = make(1, 19);  // centre + two rings
  OccupancyState occ(topo);
  occ.occupy(0, 0);
  for (int adj : topo.cells[0].adjacent) CHECK(!occ.admissible(adj, 0));
  // ring-2 cell: adjacent to ring-1 but not to the centre
  int far_cell = -1;
  for (const Cell& c : topo.cells) {
    const auto& adj = topo.cells[0].adjacent;
    if (c.id != 0 && std::find(adj.begin(), adj.end(), c.id) == adj.end()) {
      far_cell = c.id;
      break;
    }
  }
  REQUIRE(far_cell >= 0);
  CHECK(occ.admissible(far_cell, 0));
  // more users on the same cell's channel stay admissible below capacity
  CHECK(occ.admissible(0, 0));
}

TEST_CASE("co-located cells of other providers conflict") {
  const Topology topo = make(2, 1);
  OccupancyState occ(topo);
  REQUIRE(topo.cells.size() == 2);
  occ.occupy(0, 0);  // provider 0's cell uses channel 0
  CHECK(!occ.admissible(1, 0));
  CHECK(occ.admissible(1, 1));
}

TEST_CASE("random occupancy walks keep derived counts consistent") {
  const Topology topo = make(2, 7, 500.0, 3, 4);
  OccupancyState occ(topo);
  const uint64_t empty_hash = occ.state_hash();
  Rng rng(99, 0, 0);
  std::vector<std::pair<int, int>> done;
  for (int step = 0; step < 500; ++step) {
    const int cell = rng.uniform_int(topo.n_cells());
    const int ch = rng.uniform_int(topo.n_channels());
    if (occ.admissible(cell, ch)) {
      occ.occupy(cell, ch);
      done.push_back({cell, ch});
    }
  }
  // derived per-channel counters match a recount from scratch
  for (int ch = 0; ch < topo.n_channels(); ++ch) {
    int users = 0, cells = 0;
    for (int cell = 0; cell < topo.n_cells(); ++cell) {
      users += occ.count(cell, ch);
      cells += occ.count(cell, ch) > 0 ? 1 : 0;
    }
    CHECK(occ.channel_users(ch) == users);
    CHECK(occ.channel_active_cells(ch) == cells);
  }
  CHECK(occ.total_users() == static_cast<int>(done.size()));
  // no reachable state violates the conflict rule
  for (int cell = 0; cell < topo.n_cells(); ++cell) {
    for (int ch = 0; ch < topo.n_channels(); ++ch) {
      if (occ.count(cell, ch) == 0) continue;
      for (int other : topo.cells[cell].conflict) CHECK(occ.count(other, ch) == 0);
    }
  }
  // undo in reverse restores the exact state
  for (auto it = done.rbegin(); it != done.rend(); ++it) occ.release(it->first, it->second);
  CHECK(occ.state_hash() == empty_hash);
}
