#include "specshare/geometry.hpp"

#include <cmath>
#include <cstdlib>

#include "specshare/errors.hpp"

namespace specshare {

namespace {

// Corner k sits at angle 30 + 60k degrees. In lattice units (sqrt(3)/2 * R
// horizontally, R/2 vertically) the offsets from the hexagon centre are
// integers.
constexpr int kCornerA[6] = {1, 0, -1, -1, 0, 1};
constexpr int kCornerB[6] = {1, 2, 1, -1, -2, -1};

}  // namespace

Vec2 hex_center(Axial pos, double radius) {
  const double sqrt3 = std::sqrt(3.0);
  return {radius * sqrt3 * (pos.q + pos.r / 2.0), radius * 1.5 * pos.r};
}

CornerKey hex_corner_key(Axial pos, int k) {
  ensure(k >= 0 && k < 6, "hex_corner_key: corner index out of range");
  return {2LL * pos.q + pos.r + kCornerA[k], 3LL * pos.r + kCornerB[k]};
}

Vec2 corner_position(CornerKey key, double radius) {
  return {radius * std::sqrt(3.0) / 2.0 * static_cast<double>(key.a),
          radius * 0.5 * static_cast<double>(key.b)};
}

std::vector<Axial> spiral(int count) {
  ensure(count >= 0, "spiral: negative count");
  std::vector<Axial> out;
  out.reserve(static_cast<size_t>(count));
  if (count == 0) return out;
  out.push_back({0, 0});
  for (int ring = 1; static_cast<int>(out.size()) < count; ++ring) {
    Axial hex{-ring, ring};  // kAxialDirections[4] scaled by ring
    for (int side = 0; side < 6 && static_cast<int>(out.size()) < count; ++side) {
      for (int step = 0; step < ring && static_cast<int>(out.size()) < count; ++step) {
        out.push_back(hex);
        hex = {hex.q + kAxialDirections[side].q, hex.r + kAxialDirections[side].r};
      }
    }
  }
  return out;
}

int axial_distance(Axial a, Axial b) {
  const int dq = a.q - b.q;
  const int dr = a.r - b.r;
  return (std::abs(dq) + std::abs(dr) + std::abs(dq + dr)) / 2;
}

}  // namespace specshare
