#pragma once

namespace octa {

// Side lengths (a, b, c, d) of a centro-symmetric octagon, read clockwise.
// All four sides must be at least 1; hexagons and smaller degenerate the
// block-matrix shapes and are handled by the dedicated hexagon counter.
struct Sides {
  int a = 1;
  int b = 1;
  int c = 1;
  int d = 1;

  // Validates positivity; throws std::invalid_argument otherwise.
  static Sides checked(long long a, long long b, long long c, long long d);

  bool operator==(const Sides&) const = default;
};

// Number of unit rhombi in any tiling of the octagon: one tile per pair of
// de Bruijn lines from different families, ab+ac+ad+bc+bd+cd.
long long tile_count(const Sides& s);

}  // namespace octa
