#pragma once

#include <array>
#include <cstdint>
#include <vector>

namespace specshare {

struct Vec2 {
  double x = 0.0;
  double y = 0.0;
};

// Pointy-top hexagonal grid in axial coordinates.
struct Axial {
  int q = 0;
  int r = 0;
  bool operator==(const Axial&) const = default;
};

// The six axial neighbour directions, fixed order.
inline constexpr std::array<Axial, 6> kAxialDirections = {
    Axial{1, 0}, Axial{1, -1}, Axial{0, -1}, Axial{-1, 0}, Axial{-1, 1}, Axial{0, 1}};

// Integer key of a hexagon corner. Corner positions live on the lattice
// (sqrt(3)/2 * R * a, R/2 * b), so keys are exact and corner deduplication
// needs no floating-point tolerance.
struct CornerKey {
  int64_t a = 0;
  int64_t b = 0;
  bool operator==(const CornerKey&) const = default;
};

Vec2 hex_center(Axial pos, double radius);

// Key of corner k (k in 0..5, counter-clockwise from 30 degrees) of the
// hexagon at `pos`.
CornerKey hex_corner_key(Axial pos, int k);

Vec2 corner_position(CornerKey key, double radius);

// Deterministic spiral enumeration: centre first, then rings outward.
std::vector<Axial> spiral(int count);

int axial_distance(Axial a, Axial b);

}  // namespace specshare
