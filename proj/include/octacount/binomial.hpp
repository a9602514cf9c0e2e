#pragma once

#include <vector>

#include "octacount/bigint.hpp"

namespace octa {

// C(top, bottom) with the extended convention used throughout the summand
// matrices: the value is 0 whenever top < 0, bottom < 0, or bottom > top.
BigNat binomial(long top, long bottom);

BigNat factorial(unsigned long n);

// Dense Pascal triangle for rows 0..max_top, so the evaluation hot loop can
// fetch coefficients by reference without allocating. Out-of-convention
// queries return a reference to a shared zero.
class BinomialTable {
 public:
  explicit BinomialTable(int max_top);

  // Valid for any arguments; top must only stay <= max_top when the
  // convention does not already force a zero.
  const BigNat& choose(int top, int bottom) const;

  int max_top() const { return max_top_; }

 private:
  int max_top_;
  std::vector<BigNat> rows_;  // packed: row t starts at t*(t+1)/2
  BigNat zero_;
};

}  // namespace octa
