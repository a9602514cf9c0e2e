#include "octacount/plane_partitions.hpp"

#include <stdexcept>

namespace octa {

BigNat box_plane_partitions(int p, int q, int r) {
  if (p < 0 || q < 0 || r < 0) {
    throw std::invalid_argument("box dimensions must be nonnegative");
  }
  // Accumulate numerator and denominator separately; the quotient of the full
  // products is an integer even though individual factors are not.
  BigNat num = 1;
  BigNat den = 1;
  for (int i = 1; i <= p; ++i) {
    for (int j = 1; j <= q; ++j) {
      for (int k = 1; k <= r; ++k) {
        num *= i + j + k - 1;
        den *= i + j + k - 2;
      }
    }
  }
  BigNat result;
  mpz_divexact(result.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return result;
}

}  // namespace octa
