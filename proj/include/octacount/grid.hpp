#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "octacount/bigint.hpp"
#include "octacount/sides.hpp"

namespace octa {

// The exact count decomposes into one summand per pair of vertex grids: an
// x-coordinate grid and a y-coordinate grid. Each grid assigns coordinates to
// the b*d interior junction vertices where the two transversal path families
// meet; the border rows and columns are pinned by the octagon's corners.
//
// Interior cells are addressed 1-based as (k, l) with 1 <= k <= b and
// 1 <= l <= d. at(k, l) also accepts the border indices k = 0, k = b+1,
// l = 0, l = d+1 and returns the pinned value. Border rules are checked in a
// fixed order (l == 0, then k == 0, then k == b+1, then l == d+1); corners
// where two rules collide are never needed and are rejected in debug builds.

// x-coordinates: entries in [0, a], weakly increasing along both k and l.
// Border: 0 on the l == 0 and k == 0 edges, a on the k == b+1 and l == d+1
// edges.
class VertexGridX {
 public:
  explicit VertexGridX(const Sides& s);  // all-zero interior (the minimum grid)
  VertexGridX(const Sides& s, std::vector<int> interior);  // row-major in k

  int at(int k, int l) const;
  int rows() const { return sides_.b; }
  int cols() const { return sides_.d; }
  const Sides& sides() const { return sides_; }

  // True iff every entry lies in [0, a] and the monotonicity constraints hold
  // against both neighbours and the border.
  bool satisfies_constraints() const;

  std::string to_string() const;
  bool operator==(const VertexGridX&) const = default;

 private:
  friend class XCursor;
  Sides sides_;
  std::vector<int> cells_;  // row-major: cells_[(k-1) * cols() + (l-1)]
};

// y-coordinates: entries in [0, c], weakly decreasing along k and weakly
// increasing along l. Border: 0 on the l == 0 and k == b+1 edges, c on the
// k == 0 and l == d+1 edges.
class VertexGridY {
 public:
  explicit VertexGridY(const Sides& s);  // all-zero interior (the minimum grid)
  VertexGridY(const Sides& s, std::vector<int> interior);

  int at(int k, int l) const;
  int rows() const { return sides_.b; }
  int cols() const { return sides_.d; }
  const Sides& sides() const { return sides_; }

  bool satisfies_constraints() const;

  std::string to_string() const;
  bool operator==(const VertexGridY&) const = default;

 private:
  friend class YCursor;
  Sides sides_;
  std::vector<int> cells_;
};

// Cursors enumerate all admissible grids in lexicographic order of the
// row-major cell sequence, starting from the all-zero grid. seek() exists so
// parallel workers can jump to the start of their chunk; it walks forward
// step by step, which is cheap relative to evaluating even one summand.
class XCursor {
 public:
  explicit XCursor(const Sides& s) : grid_(s) {}

  const VertexGridX& grid() const { return grid_; }
  std::uint64_t rank() const { return rank_; }

  bool advance();  // false once the last grid has been passed
  void reset();
  void seek(std::uint64_t rank);

 private:
  VertexGridX grid_;
  std::uint64_t rank_ = 0;
};

class YCursor {
 public:
  explicit YCursor(const Sides& s) : grid_(s) {}

  const VertexGridY& grid() const { return grid_; }
  std::uint64_t rank() const { return rank_; }

  bool advance();
  void reset();
  void seek(std::uint64_t rank);

 private:
  VertexGridY grid_;
  std::uint64_t rank_ = 0;
};

// Total number of admissible grids of each kind. Both are MacMahon box
// counts: the x-grids are in bijection with plane partitions in a b x d box
// with entries at most a, the y-grids with entries at most c.
BigNat count_grids_x(const Sides& s);
BigNat count_grids_y(const Sides& s);

}  // namespace octa
