#pragma once

#include <vector>

#include "octacount/bigint.hpp"
#include "octacount/binomial.hpp"
#include "octacount/grid.hpp"

namespace octa {

// Dense square matrix of exact integers, row-major, 0-based.
class TermMatrix {
 public:
  explicit TermMatrix(int order) : order_(order), cells_(order * order) {}

  int order() const { return order_; }
  BigInt& at(int i, int j) { return cells_[i * order_ + j]; }
  const BigInt& at(int i, int j) const { return cells_[i * order_ + j]; }
  std::vector<BigInt>& cells() { return cells_; }
  const std::vector<BigInt>& cells() const { return cells_; }

 private:
  int order_;
  std::vector<BigInt> cells_;
};

// Each summand of the exact count is a product of path matrices, one per
// transversal slice of the octagon. Two families appear:
//
//  - sw slices, indexed u = 1..d+1: a b x b matrix whose (i, j) entry counts
//    east/north lattice paths from junction vertex (i, u-1) to (j, u) after
//    the standard disjointness shift. Entry: C(dx + dy, dx + j - i) with
//    dx = x(j, u) - x(i, u-1) and dy = y(j, u) - y(i, u-1).
//
//  - nw slices, indexed v = 1..b+1: a d x d matrix whose (i, j) entry counts
//    east/south paths from vertex (v-1, i) to (v, j). Entry:
//    C(dx + dy, dx + j - i) with dx = x(v, j) - x(v-1, i) and
//    dy = y(v-1, i) - y(v, j).
//
// The binomial table must cover tops up to a + c.

// Fill `out` (row-major, order*order entries) in place; no allocation beyond
// what the destination's limbs already hold.
void fill_sw_path_matrix(int u, const VertexGridX& x, const VertexGridY& y,
                         const BinomialTable& table, BigInt* out);
void fill_nw_path_matrix(int v, const VertexGridX& x, const VertexGridY& y,
                         const BinomialTable& table, BigInt* out);

TermMatrix sw_path_matrix(int u, const VertexGridX& x, const VertexGridY& y,
                          const BinomialTable& table);
TermMatrix nw_path_matrix(int v, const VertexGridX& x, const VertexGridY& y,
                          const BinomialTable& table);

}  // namespace octa
