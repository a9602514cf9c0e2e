#include "octacount/binomial.hpp"

#include <cassert>
#include <cstddef>

namespace octa {

BigNat binomial(long top, long bottom) {
  if (top < 0 || bottom < 0 || bottom > top) return BigNat(0);
  BigNat result;
  mpz_bin_uiui(result.get_mpz_t(), static_cast<unsigned long>(top),
               static_cast<unsigned long>(bottom));
  return result;
}

BigNat factorial(unsigned long n) {
  BigNat result;
  mpz_fac_ui(result.get_mpz_t(), n);
  return result;
}

namespace {

std::size_t row_start(int top) {
  return static_cast<std::size_t>(top) * (top + 1) / 2;
}

}  // namespace

BinomialTable::BinomialTable(int max_top) : max_top_(max_top), zero_(0) {
  assert(max_top >= 0);
  rows_.resize(row_start(max_top + 1));
  rows_[0] = 1;
  for (int t = 1; t <= max_top; ++t) {
    const std::size_t row = row_start(t);
    const std::size_t prev = row_start(t - 1);
    rows_[row] = 1;
    rows_[row + t] = 1;
    for (int j = 1; j < t; ++j) {
      rows_[row + j] = rows_[prev + j - 1] + rows_[prev + j];
    }
  }
}

const BigNat& BinomialTable::choose(int top, int bottom) const {
  if (top < 0 || bottom < 0 || bottom > top) return zero_;
  assert(top <= max_top_ && "binomial table built too small");
  return rows_[row_start(top) + bottom];
}

}  // namespace octa
