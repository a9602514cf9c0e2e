#pragma once

#include <stdexcept>
#include <vector>

#include "octacount/bigint.hpp"
#include "octacount/counting.hpp"
#include "octacount/grid.hpp"

namespace octa {

// Brute-force cross-check of the determinant engine: enumerate the
// vertex-disjoint directed path families explicitly and recount tilings with
// no determinant anywhere. Deliberately slow and simple; refuses to run
// beyond a small work budget instead of running unboundedly.

struct LatticePoint {
  int x = 0;
  int y = 0;
  bool operator==(const LatticePoint&) const = default;
};

enum class StepSet {
  east_north,  // sw-type paths
  east_south,  // nw-type paths
};

struct PathFamilySpec {
  std::vector<LatticePoint> departures;
  std::vector<LatticePoint> arrivals;  // same length as departures
  StepSet steps = StepSet::east_north;
};

// Monotone paths from `from` to `to` under the step set: C(dx+dy, dx), with 0
// whenever the displacement opposes the step set.
BigNat count_lattice_paths(LatticePoint from, LatticePoint to, StepSet steps);

// Families of vertex-disjoint paths, path i from departures[i] to
// arrivals[i], counted by depth-first enumeration (path i is fully placed
// before path i+1 starts; any step onto an occupied vertex is pruned).
// `steps`, if nonnull, accumulates one unit per DFS extension as a work
// counter for budget enforcement by callers.
BigNat enumerate_disjoint_families(const PathFamilySpec& spec,
                                   unsigned long long* steps = nullptr);

// Disjoint-family counts for one transversal slice of the octagon, built
// from the same grids and endpoint conventions as the path matrices, after
// the disjointness shift: sw path k moves by (k-1)*(1,-1), nw path l by
// (l-1)*(1,1). Each must equal the determinant of the corresponding matrix.
BigNat oracle_count_sw(int u, const VertexGridX& x, const VertexGridY& y);
BigNat oracle_count_nw(int v, const VertexGridX& x, const VertexGridY& y);

// Thrown instead of starting (or continuing) a run that would exceed the
// oracle's work budget.
class OracleBudgetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Full tiling count with every determinant replaced by explicit enumeration.
// Budget: at most 10^4 grid pairs, path grid area a*c at most 16, and at
// most 10^8 estimated elementary steps; beyond that throws OracleBudgetError.
CountReport oracle_count_tilings(const Sides& sides);

}  // namespace octa
