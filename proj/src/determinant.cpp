#include "octacount/determinant.hpp"

#include <cassert>

namespace octa {

namespace {

// Row-major cell access for a destructive in-place elimination.
inline BigInt& cell(std::span<BigInt> m, int n, int i, int j) {
  return m[static_cast<std::size_t>(i) * n + j];
}

}  // namespace

const BigInt& DetScratch::det_destructive(std::span<BigInt> m, int order) {
  assert(static_cast<std::size_t>(order) * order <= m.size());
  switch (order) {
    case 0:
      result_ = 1;
      return result_;
    case 1:
      result_ = m[0];
      return result_;
    case 2:
      t1_ = m[0] * m[3];
      t2_ = m[1] * m[2];
      result_ = t1_ - t2_;
      return result_;
    case 3:
      // Cofactor expansion along the first row.
      t1_ = m[4] * m[8];
      t2_ = m[5] * m[7];
      t1_ -= t2_;
      t1_ *= m[0];
      result_ = t1_;
      t1_ = m[3] * m[8];
      t2_ = m[5] * m[6];
      t1_ -= t2_;
      t1_ *= m[1];
      result_ -= t1_;
      t1_ = m[3] * m[7];
      t2_ = m[4] * m[6];
      t1_ -= t2_;
      t1_ *= m[2];
      result_ += t1_;
      return result_;
    default:
      break;
  }

  // Bareiss fraction-free elimination. After step k, entry (i, j) with
  // i, j > k is the determinant of the leading minor on rows/columns
  // {0..k, i}/{0..k, j}, so dividing by the previous pivot is always exact.
  int sign = 1;
  for (int k = 0; k + 1 < order; ++k) {
    if (sgn(cell(m, order, k, k)) == 0) {
      int pivot_row = -1;
      for (int r = k + 1; r < order; ++r) {
        if (sgn(cell(m, order, r, k)) != 0) {
          pivot_row = r;
          break;
        }
      }
      if (pivot_row < 0) {
        result_ = 0;
        return result_;
      }
      for (int j = k; j < order; ++j) {
        mpz_swap(cell(m, order, k, j).get_mpz_t(),
                 cell(m, order, pivot_row, j).get_mpz_t());
      }
      sign = -sign;
    }
    const BigInt* prev = (k == 0) ? nullptr : &cell(m, order, k - 1, k - 1);
    for (int i = k + 1; i < order; ++i) {
      for (int j = k + 1; j < order; ++j) {
        t1_ = cell(m, order, k, k) * cell(m, order, i, j);
        t2_ = cell(m, order, i, k) * cell(m, order, k, j);
        t1_ -= t2_;
        if (prev == nullptr) {
          mpz_swap(cell(m, order, i, j).get_mpz_t(), t1_.get_mpz_t());
        } else {
          mpz_divexact(cell(m, order, i, j).get_mpz_t(), t1_.get_mpz_t(),
                       prev->get_mpz_t());
        }
      }
    }
  }
  result_ = cell(m, order, order - 1, order - 1);
  if (sign < 0) result_ = -result_;
  return result_;
}

BigInt det_exact(const TermMatrix& m) {
  std::vector<BigInt> copy = m.cells();
  DetScratch scratch;
  return scratch.det_destructive(std::span(copy), m.order());
}

}  // namespace octa
