#include "octacount/oracle.hpp"

#include <algorithm>
#include <cassert>
#include <string>

#include "octacount/binomial.hpp"

namespace octa {

namespace {

// Work budget for a full oracle run: pair limit and path-grid area keep the
// spec small; the step estimate (product of single-path counts, summed over
// all families) catches pathological cases the first two let through.
constexpr long kMaxGridPairs = 10'000;
constexpr int kMaxPathGridArea = 16;
constexpr long kMaxEstimatedSteps = 100'000'000;

struct FamilyEnumerator {
  const PathFamilySpec& spec;
  int min_x, min_y, width, height;
  std::vector<char> occupied;
  unsigned long long steps = 0;
  BigNat families = 0;

  explicit FamilyEnumerator(const PathFamilySpec& s) : spec(s) {
    int max_x = 0, max_y = 0;
    min_x = min_y = 0;
    bool first = true;
    for (const auto& list : {spec.departures, spec.arrivals}) {
      for (const LatticePoint& p : list) {
        if (first) {
          min_x = max_x = p.x;
          min_y = max_y = p.y;
          first = false;
        } else {
          min_x = std::min(min_x, p.x);
          max_x = std::max(max_x, p.x);
          min_y = std::min(min_y, p.y);
          max_y = std::max(max_y, p.y);
        }
      }
    }
    width = max_x - min_x + 1;
    height = max_y - min_y + 1;
    occupied.assign(static_cast<std::size_t>(width) * height, 0);
  }

  char& cell(LatticePoint p) {
    return occupied[static_cast<std::size_t>(p.y - min_y) * width +
                    (p.x - min_x)];
  }

  bool in_box(LatticePoint p) const {
    return p.x >= min_x && p.x < min_x + width && p.y >= min_y &&
           p.y < min_y + height;
  }

  void place_family(std::size_t i) {
    if (i == spec.departures.size()) {
      ++families;
      return;
    }
    walk(i, spec.departures[i]);
  }

  // Extends path i from p; every vertex of a path is marked occupied while
  // the deeper paths are placed, which is exactly vertex-disjointness.
  void walk(std::size_t i, LatticePoint p) {
    ++steps;
    const LatticePoint goal = spec.arrivals[i];
    if (!in_box(p) || cell(p)) return;
    // Monotone steps can never return, so reaching the goal ends the path.
    if (p == goal) {
      cell(p) = 1;
      place_family(i + 1);
      cell(p) = 0;
      return;
    }
    const int dy = spec.steps == StepSet::east_north ? 1 : -1;
    if (p.x > goal.x || (goal.y - p.y) * dy < 0) return;  // overshot
    cell(p) = 1;
    walk(i, {p.x + 1, p.y});
    walk(i, {p.x, p.y + dy});
    cell(p) = 0;
  }
};

}  // namespace

BigNat count_lattice_paths(LatticePoint from, LatticePoint to, StepSet steps) {
  const int dx = to.x - from.x;
  const int dy = steps == StepSet::east_north ? to.y - from.y : from.y - to.y;
  if (dx < 0 || dy < 0) return BigNat(0);
  return binomial(dx + dy, dx);
}

BigNat enumerate_disjoint_families(const PathFamilySpec& spec,
                                   unsigned long long* steps) {
  assert(spec.departures.size() == spec.arrivals.size());
  if (spec.departures.empty()) return BigNat(1);
  FamilyEnumerator e(spec);
  e.place_family(0);
  if (steps != nullptr) *steps += e.steps;
  return e.families;
}

namespace {

PathFamilySpec sw_family_spec(int u, const VertexGridX& x,
                              const VertexGridY& y) {
  PathFamilySpec spec;
  spec.steps = StepSet::east_north;
  // Shift path k by (k-1) * (1, -1) to turn non-crossing into
  // vertex-disjoint without changing the count.
  for (int k = 1; k <= x.rows(); ++k) {
    spec.departures.push_back({x.at(k, u - 1) + (k - 1), y.at(k, u - 1) - (k - 1)});
    spec.arrivals.push_back({x.at(k, u) + (k - 1), y.at(k, u) - (k - 1)});
  }
  return spec;
}

PathFamilySpec nw_family_spec(int v, const VertexGridX& x,
                              const VertexGridY& y) {
  PathFamilySpec spec;
  spec.steps = StepSet::east_south;
  // Shift path l by (l-1) * (1, 1).
  for (int l = 1; l <= x.cols(); ++l) {
    spec.departures.push_back({x.at(v - 1, l) + (l - 1), y.at(v - 1, l) + (l - 1)});
    spec.arrivals.push_back({x.at(v, l) + (l - 1), y.at(v, l) + (l - 1)});
  }
  return spec;
}

// The pre-enumeration work estimate: ignoring disjointness, each family
// explores at most the product of its single-path counts.
BigNat family_step_estimate(const PathFamilySpec& spec) {
  BigNat est = 1;
  for (std::size_t i = 0; i < spec.departures.size(); ++i) {
    est *= count_lattice_paths(spec.departures[i], spec.arrivals[i],
                               spec.steps);
  }
  return est;
}

}  // namespace

BigNat oracle_count_sw(int u, const VertexGridX& x, const VertexGridY& y) {
  return enumerate_disjoint_families(sw_family_spec(u, x, y));
}

BigNat oracle_count_nw(int v, const VertexGridX& x, const VertexGridY& y) {
  return enumerate_disjoint_families(nw_family_spec(v, x, y));
}

CountReport oracle_count_tilings(const Sides& sides) {
  const auto start = std::chrono::steady_clock::now();
  CountReport report;
  report.sides = sides;
  report.method = "oracle";
  report.workers = 1;

  const BigNat terms = grid_sum_terms(sides);
  if (terms > kMaxGridPairs) {
    throw OracleBudgetError(
        "oracle scale exceeded: " + BigNat(terms).get_str() +
        " grid pairs, budget " + std::to_string(kMaxGridPairs));
  }
  if (sides.a * sides.c > kMaxPathGridArea) {
    throw OracleBudgetError(
        "oracle scale exceeded: path grid area " +
        std::to_string(sides.a * sides.c) + ", budget " +
        std::to_string(kMaxPathGridArea));
  }

  BigNat estimate = 0;
  BigNat total = 0;
  XCursor xc(sides);
  do {
    YCursor yc(sides);
    do {
      BigNat term = 1;
      for (int u = 1; u <= sides.d + 1 && term != 0; ++u) {
        const PathFamilySpec spec = sw_family_spec(u, xc.grid(), yc.grid());
        estimate += family_step_estimate(spec);
        if (estimate > kMaxEstimatedSteps) {
          throw OracleBudgetError(
              "oracle scale exceeded: estimated work above " +
              std::to_string(kMaxEstimatedSteps) + " steps");
        }
        term *= enumerate_disjoint_families(spec);
      }
      for (int v = 1; v <= sides.b + 1 && term != 0; ++v) {
        const PathFamilySpec spec = nw_family_spec(v, xc.grid(), yc.grid());
        estimate += family_step_estimate(spec);
        if (estimate > kMaxEstimatedSteps) {
          throw OracleBudgetError(
              "oracle scale exceeded: estimated work above " +
              std::to_string(kMaxEstimatedSteps) + " steps");
        }
        term *= enumerate_disjoint_families(spec);
      }
      total += term;
    } while (yc.advance());
  } while (xc.advance());

  report.count = std::move(total);
  report.terms_evaluated = terms;
  report.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
      std::chrono::steady_clock::now() - start);
  return report;
}

}  // namespace octa
