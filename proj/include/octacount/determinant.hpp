#pragma once

#include <span>

#include "octacount/bigint.hpp"
#include "octacount/term_matrix.hpp"

namespace octa {

// Exact integer determinants. Small orders use cofactor expansion; larger
// ones use fraction-free (Bareiss) elimination, whose intermediate entries
// are themselves determinants of leading minors, so every division is exact.
//
// DetScratch owns the temporaries so the evaluation loop can compute millions
// of determinants without touching the allocator once limb buffers have grown
// to their working size.
class DetScratch {
 public:
  // Destroys the contents of `cells` (row-major, order*order entries).
  const BigInt& det_destructive(std::span<BigInt> cells, int order);

 private:
  BigInt result_;
  BigInt t1_;
  BigInt t2_;
  BigInt t3_;
};

// Convenience wrapper for tests and one-off uses; copies the matrix.
BigInt det_exact(const TermMatrix& m);

}  // namespace octa
