#include "octacount/grid.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

#include "octacount/plane_partitions.hpp"

namespace octa {

namespace {

std::vector<int> checked_interior(const Sides& s, std::vector<int> interior) {
  const std::size_t want = static_cast<std::size_t>(s.b) * s.d;
  if (interior.size() != want) {
    throw std::invalid_argument("interior size does not match b*d");
  }
  return interior;
}

std::string render(const std::vector<int>& cells, int rows, int cols) {
  std::string out;
  for (int k = 0; k < rows; ++k) {
    for (int l = 0; l < cols; ++l) {
      if (l > 0) out += ' ';
      out += std::to_string(cells[k * cols + l]);
    }
    out += '\n';
  }
  return out;
}

}  // namespace

VertexGridX::VertexGridX(const Sides& s)
    : sides_(s), cells_(static_cast<std::size_t>(s.b) * s.d, 0) {}

VertexGridX::VertexGridX(const Sides& s, std::vector<int> interior)
    : sides_(s), cells_(checked_interior(s, std::move(interior))) {}

int VertexGridX::at(int k, int l) const {
  assert(k >= 0 && k <= rows() + 1 && l >= 0 && l <= cols() + 1);
  assert(!((k == 0 || k == rows() + 1) && (l == 0 || l == cols() + 1)) &&
         "corner of the border is never well-defined");
  if (l == 0) return 0;
  if (k == 0) return 0;
  if (k == rows() + 1) return sides_.a;
  if (l == cols() + 1) return sides_.a;
  return cells_[static_cast<std::size_t>(k - 1) * cols() + (l - 1)];
}

bool VertexGridX::satisfies_constraints() const {
  for (int k = 1; k <= rows(); ++k) {
    for (int l = 1; l <= cols(); ++l) {
      const int v = at(k, l);
      if (v < 0 || v > sides_.a) return false;
      if (v < at(k - 1, l) || v < at(k, l - 1)) return false;
    }
  }
  return true;
}

std::string VertexGridX::to_string() const {
  return render(cells_, rows(), cols());
}

VertexGridY::VertexGridY(const Sides& s)
    : sides_(s), cells_(static_cast<std::size_t>(s.b) * s.d, 0) {}

VertexGridY::VertexGridY(const Sides& s, std::vector<int> interior)
    : sides_(s), cells_(checked_interior(s, std::move(interior))) {}

int VertexGridY::at(int k, int l) const {
  assert(k >= 0 && k <= rows() + 1 && l >= 0 && l <= cols() + 1);
  assert(!((k == 0 || k == rows() + 1) && (l == 0 || l == cols() + 1)) &&
         "corner of the border is never well-defined");
  if (l == 0) return 0;
  if (k == 0) return sides_.c;
  if (k == rows() + 1) return 0;
  if (l == cols() + 1) return sides_.c;
  return cells_[static_cast<std::size_t>(k - 1) * cols() + (l - 1)];
}

bool VertexGridY::satisfies_constraints() const {
  for (int k = 1; k <= rows(); ++k) {
    for (int l = 1; l <= cols(); ++l) {
      const int v = at(k, l);
      if (v < 0 || v > sides_.c) return false;
      if (v > at(k - 1, l) || v < at(k, l - 1)) return false;
    }
  }
  return true;
}

std::string VertexGridY::to_string() const {
  return render(cells_, rows(), cols());
}

bool XCursor::advance() {
  const int rows = grid_.rows();
  const int cols = grid_.cols();
  const int cap = grid_.sides_.a;
  auto& cells = grid_.cells_;
  // Lexicographic successor: bump the last cell still below its cap (the cap
  // never depends on later cells), then drop every later cell to its minimum.
  for (int idx = rows * cols - 1; idx >= 0; --idx) {
    if (cells[idx] < cap) {
      ++cells[idx];
      for (int j = idx + 1; j < rows * cols; ++j) {
        const int k = j / cols + 1;
        const int l = j % cols + 1;
        cells[j] = std::max(grid_.at(k - 1, l), grid_.at(k, l - 1));
      }
      ++rank_;
      return true;
    }
  }
  return false;
}

void XCursor::reset() {
  std::fill(grid_.cells_.begin(), grid_.cells_.end(), 0);
  rank_ = 0;
}

void XCursor::seek(std::uint64_t rank) {
  if (rank < rank_) reset();
  while (rank_ < rank) {
    if (!advance()) throw std::out_of_range("seek past the last x grid");
  }
}

bool YCursor::advance() {
  const int rows = grid_.rows();
  const int cols = grid_.cols();
  auto& cells = grid_.cells_;
  // Same successor scheme; here a cell's cap is min(c, value above) and its
  // minimum is the value to its left (0 at the left border).
  for (int idx = rows * cols - 1; idx >= 0; --idx) {
    const int k = idx / cols + 1;
    const int l = idx % cols + 1;
    const int cap = std::min(grid_.sides_.c, grid_.at(k - 1, l));
    if (cells[idx] < cap) {
      ++cells[idx];
      for (int j = idx + 1; j < rows * cols; ++j) {
        const int jk = j / cols + 1;
        const int jl = j % cols + 1;
        cells[j] = grid_.at(jk, jl - 1);
      }
      ++rank_;
      return true;
    }
  }
  return false;
}

void YCursor::reset() {
  std::fill(grid_.cells_.begin(), grid_.cells_.end(), 0);
  rank_ = 0;
}

void YCursor::seek(std::uint64_t rank) {
  if (rank < rank_) reset();
  while (rank_ < rank) {
    if (!advance()) throw std::out_of_range("seek past the last y grid");
  }
}

BigNat count_grids_x(const Sides& s) {
  return box_plane_partitions(s.a, s.b, s.d);
}

BigNat count_grids_y(const Sides& s) {
  return box_plane_partitions(s.c, s.b, s.d);
}

}  // namespace octa
