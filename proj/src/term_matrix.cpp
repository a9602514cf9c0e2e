#include "octacount/term_matrix.hpp"

#include <cassert>

namespace octa {

void fill_sw_path_matrix(int u, const VertexGridX& x, const VertexGridY& y,
                         const BinomialTable& table, BigInt* out) {
  const int b = x.rows();
  assert(u >= 1 && u <= x.cols() + 1);
  for (int i = 1; i <= b; ++i) {
    for (int j = 1; j <= b; ++j) {
      const int dx = x.at(j, u) - x.at(i, u - 1);
      const int dy = y.at(j, u) - y.at(i, u - 1);
      out[(i - 1) * b + (j - 1)] = table.choose(dx + dy, dx + j - i);
    }
  }
}

void fill_nw_path_matrix(int v, const VertexGridX& x, const VertexGridY& y,
                         const BinomialTable& table, BigInt* out) {
  const int d = x.cols();
  assert(v >= 1 && v <= x.rows() + 1);
  for (int i = 1; i <= d; ++i) {
    for (int j = 1; j <= d; ++j) {
      const int dx = x.at(v, j) - x.at(v - 1, i);
      const int dy = y.at(v - 1, i) - y.at(v, j);
      out[(i - 1) * d + (j - 1)] = table.choose(dx + dy, dx + j - i);
    }
  }
}

TermMatrix sw_path_matrix(int u, const VertexGridX& x, const VertexGridY& y,
                          const BinomialTable& table) {
  TermMatrix m(x.rows());
  fill_sw_path_matrix(u, x, y, table, m.cells().data());
  return m;
}

TermMatrix nw_path_matrix(int v, const VertexGridX& x, const VertexGridY& y,
                          const BinomialTable& table) {
  TermMatrix m(x.cols());
  fill_nw_path_matrix(v, x, y, table, m.cells().data());
  return m;
}

}  // namespace octa
