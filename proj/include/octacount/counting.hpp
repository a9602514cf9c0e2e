#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>

#include "octacount/bigint.hpp"
#include "octacount/sides.hpp"

namespace octa {

// Result of one counting run, independent of which method produced it. All
// applicable methods must agree on `count` for the same sides.
struct CountReport {
  Sides sides;
  std::string method;  // det | elnitsky-a1c1 | elnitsky-ab11 | oracle
  BigNat count;
  BigNat terms_evaluated;
  std::chrono::milliseconds elapsed{0};
  int workers = 1;
  // Determinant telemetry from the grid sum; the underlying identity promises
  // every determinant is strictly positive, so a nonpositive one is a bug.
  std::uint64_t determinants_evaluated = 0;
  std::uint64_t nonpositive_determinants = 0;
};

struct CountOptions {
  int workers = 0;  // 0: use OCTACOUNT_WORKERS or the machine's thread count
  // Called at most once per progress_interval with (terms done, terms total).
  std::function<void(std::uint64_t, std::uint64_t)> progress;
  std::chrono::milliseconds progress_interval{1000};
};

// Exact tiling count of the octagon as the determinantal sum over all pairs
// of admissible vertex grids. The x-grid stream is split into `workers`
// contiguous rank chunks; each worker scans the full y stream per x grid and
// keeps a private partial sum, so the combined total is bit-identical for any
// worker count. Throws std::invalid_argument on nonpositive sides.
CountReport count_tilings(const Sides& sides, const CountOptions& opts = {});

// Plain nested-loop reference implementation of the same sum: no chunking,
// no threads, no shared scratch. Kept as the comparison point for tests and
// the benchmark tool.
CountReport count_tilings_serial(const Sides& sides);

// Number of summands |X grids| * |Y grids| the grid sum would evaluate; used
// for budget warnings before committing to a run.
BigNat grid_sum_terms(const Sides& sides);

// Closed forms for octagons with two unit sides (Elnitsky, and a later
// simplification). All accept 0 where the expression stays well-defined,
// even though such sides are not valid octagons.
//
// Opposite unit sides, b = d = 1:
//   sum over r+s = a, t+u = c of C(r+t,r) C(s+t,s) C(r+u,r) C(s+u,s).
BigNat elnitsky_a1c1(int a, int c);

// Adjacent unit sides, c = d = 1:
//   2 (a+b+1)! (a+b+2)! / (a! b! (a+2)! (b+2)!), an exact division.
BigNat elnitsky_ab11(int a, int b);

// Simplified form of the b = d = 1 case, via exact rationals:
//   (a+c+1)! / (a! c! (2a+1)(2c+1)) *
//     [ 2 (a+c+1)! / (a! c!) + sum_{k=0..a} C(a,k) C(c,k) / (2k-1) ].
// The k = 0 summand has denominator -1; rational arithmetic absorbs it.
// Requires a, c >= 1; throws std::logic_error if the result is not integral.
BigNat elnitsky_simplified(int a, int c);

// If some rotation or reflection of `sides` has two unit sides, count via the
// matching closed form and report which one; otherwise nullopt. Opposite-pair
// forms are preferred when both patterns apply.
std::optional<CountReport> elnitsky_count(const Sides& sides);

// Rhombus tilings of the centro-symmetric hexagon with sides p, q, r
// (MacMahon's box formula).
BigNat hex_count(int p, int q, int r);

// hex_count(b,d,c) * hex_count(b,d,a): tilings obtainable by cutting the
// octagon into two hexagons, hence a lower bound on the full count.
BigNat lower_bound(const Sides& sides);

// Configurational entropy per tile, ln(count) / tile_count(sides). The one
// floating-point computation in the project; computed from the count's
// bit length plus a logarithm of its leading limbs, relative error well
// under 1e-9. Throws std::domain_error if count < 1.
double entropy(const Sides& sides, const BigNat& count);

// Large-hexagon limit of the entropy per tile, (3/2) ln 3 - 2 ln 2.
double hexagon_entropy_limit();

// Exact counts for the diagonal family (n,n,n,n), n = 1..5. n <= 3 are
// recomputed by the test suite on every run; n = 4 is recomputed by the
// opt-in extended acceptance job; n = 5 (about 7e16 summands) is beyond
// desk-scale compute and is kept as a reference value.
std::optional<BigNat> reference_diagonal_count(int n);

}  // namespace octa
