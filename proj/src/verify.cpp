#include "octacount/verify.hpp"

#include <algorithm>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "octacount/binomial.hpp"
#include "octacount/counting.hpp"
#include "octacount/determinant.hpp"
#include "octacount/grid.hpp"
#include "octacount/oracle.hpp"
#include "octacount/term_matrix.hpp"

namespace octa {

namespace {

struct Failure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string sides_str(const Sides& s) {
  return "(" + std::to_string(s.a) + "," + std::to_string(s.b) + "," +
         std::to_string(s.c) + "," + std::to_string(s.d) + ")";
}

std::vector<Sides> all_sides_up_to(int m) {
  std::vector<Sides> out;
  for (int a = 1; a <= m; ++a)
    for (int b = 1; b <= m; ++b)
      for (int c = 1; c <= m; ++c)
        for (int d = 1; d <= m; ++d) out.push_back(Sides{a, b, c, d});
  return out;
}

// Full counts are re-used across suites; keyed by the exact side tuple so no
// suite silently leans on the symmetry it is supposed to establish.
class CountCache {
 public:
  explicit CountCache(int workers) : workers_(workers) {}

  const BigNat& get(const Sides& s) {
    const std::array<int, 4> key{s.a, s.b, s.c, s.d};
    auto it = cache_.find(key);
    if (it == cache_.end()) {
      CountOptions opts;
      opts.workers = workers_;
      it = cache_.emplace(key, count_tilings(s, opts).count).first;
    }
    return it->second;
  }

 private:
  int workers_;
  std::map<std::array<int, 4>, BigNat> cache_;
};

void suite_known_counts(const VerifyOptions& o, CountCache& cache,
                        VerifySuiteResult& r) {
  (void)cache;  // wants the full report, not just the count
  const int top = std::min(o.max_side, 3);
  for (int n = 1; n <= top; ++n) {
    const Sides s{n, n, n, n};
    CountOptions opts;
    opts.workers = o.workers;
    const CountReport rep = count_tilings(s, opts);
    ++r.checks;
    const BigNat want = *reference_diagonal_count(n);
    if (rep.count != want) {
      throw Failure("sides " + sides_str(s) + ": count " +
                    to_decimal(rep.count) + ", recorded value " +
                    to_decimal(want));
    }
    ++r.checks;
    if (rep.terms_evaluated != grid_sum_terms(s)) {
      throw Failure("sides " + sides_str(s) + ": terms " +
                    to_decimal(rep.terms_evaluated) +
                    " disagree with the box formula " +
                    to_decimal(grid_sum_terms(s)));
    }
    ++r.checks;
    if (rep.nonpositive_determinants != 0) {
      throw Failure("sides " + sides_str(s) + ": " +
                    std::to_string(rep.nonpositive_determinants) +
                    " nonpositive determinants");
    }
  }
}

void suite_closed_form(const VerifyOptions& o, CountCache& cache,
                       VerifySuiteResult& r) {
  (void)o;  // cheap enough to run at full range regardless of max_side
  for (int a = 1; a <= 4; ++a) {
    for (int c = 1; c <= 4; ++c) {
      const Sides s{a, 1, c, 1};
      const BigNat via_sum = cache.get(s);
      const BigNat closed = elnitsky_a1c1(a, c);
      const BigNat simplified = elnitsky_simplified(a, c);
      ++r.checks;
      if (via_sum != closed || via_sum != simplified) {
        throw Failure("sides " + sides_str(s) + ": grid sum " +
                      to_decimal(via_sum) + ", closed form " +
                      to_decimal(closed) + ", simplified " +
                      to_decimal(simplified));
      }
    }
  }
  for (int a = 1; a <= 4; ++a) {
    for (int b = 1; b <= 4; ++b) {
      const Sides s{a, b, 1, 1};
      const BigNat via_sum = cache.get(s);
      const BigNat closed = elnitsky_ab11(a, b);
      ++r.checks;
      if (via_sum != closed) {
        throw Failure("sides " + sides_str(s) + ": grid sum " +
                      to_decimal(via_sum) + ", closed form " +
                      to_decimal(closed));
      }
    }
  }
  for (int a = 1; a <= 8; ++a) {
    for (int c = 1; c <= 8; ++c) {
      ++r.checks;
      if (elnitsky_simplified(a, c) != elnitsky_a1c1(a, c)) {
        throw Failure("simplified(" + std::to_string(a) + "," +
                      std::to_string(c) + ") disagrees with the direct form");
      }
    }
  }
}

void suite_symmetry(const VerifyOptions& o, CountCache& cache,
                    VerifySuiteResult& r) {
  for (const Sides& s : all_sides_up_to(std::min(o.max_side, 2))) {
    const BigNat base = cache.get(s);
    const Sides rotated{s.b, s.c, s.d, s.a};
    const Sides reversed{s.d, s.c, s.b, s.a};
    ++r.checks;
    if (cache.get(rotated) != base) {
      throw Failure("sides " + sides_str(s) + " vs rotation " +
                    sides_str(rotated));
    }
    ++r.checks;
    if (cache.get(reversed) != base) {
      throw Failure("sides " + sides_str(s) + " vs reversal " +
                    sides_str(reversed));
    }
  }
}

void suite_oracle_sweep(const VerifyOptions& o, CountCache& cache,
                        VerifySuiteResult& r) {
  for (const Sides& s : all_sides_up_to(std::min(o.max_side, 2))) {
    const BinomialTable table(s.a + s.c);
    XCursor xc(s);
    do {
      YCursor yc(s);
      do {
        const VertexGridX& x = xc.grid();
        const VertexGridY& y = yc.grid();
        for (int u = 1; u <= s.d + 1; ++u) {
          ++r.checks;
          const BigNat enumerated = oracle_count_sw(u, x, y);
          const BigInt determinant = det_exact(sw_path_matrix(u, x, y, table));
          if (enumerated != determinant) {
            throw Failure("sides " + sides_str(s) + ", u=" +
                          std::to_string(u) + ", x grid:\n" + x.to_string() +
                          "y grid:\n" + y.to_string() + "enumeration " +
                          to_decimal(enumerated) + ", determinant " +
                          to_decimal(determinant));
          }
        }
        for (int v = 1; v <= s.b + 1; ++v) {
          ++r.checks;
          const BigNat enumerated = oracle_count_nw(v, x, y);
          const BigInt determinant = det_exact(nw_path_matrix(v, x, y, table));
          if (enumerated != determinant) {
            throw Failure("sides " + sides_str(s) + ", v=" +
                          std::to_string(v) + ", x grid:\n" + x.to_string() +
                          "y grid:\n" + y.to_string() + "enumeration " +
                          to_decimal(enumerated) + ", determinant " +
                          to_decimal(determinant));
          }
        }
      } while (yc.advance());
    } while (xc.advance());
  }

  const std::vector<Sides> totals = {
      Sides{1, 1, 1, 1}, Sides{2, 1, 2, 1}, Sides{2, 2, 2, 1},
      Sides{2, 2, 2, 2}};
  for (const Sides& s : totals) {
    if (std::max({s.a, s.b, s.c, s.d}) > o.max_side) continue;
    ++r.checks;
    const CountReport oracle = oracle_count_tilings(s);
    if (oracle.count != cache.get(s)) {
      throw Failure("sides " + sides_str(s) + ": oracle total " +
                    to_decimal(oracle.count) + ", grid sum " +
                    to_decimal(cache.get(s)));
    }
  }
}

void suite_lower_bound(const VerifyOptions& o, CountCache& cache,
                       VerifySuiteResult& r) {
  for (const Sides& s : all_sides_up_to(std::min(o.max_side, 3))) {
    ++r.checks;
    const BigNat bound = lower_bound(s);
    const BigNat& exact = cache.get(s);
    if (!(bound < exact)) {
      throw Failure("sides " + sides_str(s) + ": bound " + to_decimal(bound) +
                    " not below count " + to_decimal(exact));
    }
  }
}

}  // namespace

bool run_verify_suites(const VerifyOptions& opts, std::ostream& out,
                       std::vector<VerifySuiteResult>* results) {
  using SuiteFn = void (*)(const VerifyOptions&, CountCache&,
                           VerifySuiteResult&);
  const std::pair<const char*, SuiteFn> suites[] = {
      {"known-counts", suite_known_counts},
      {"closed-form", suite_closed_form},
      {"symmetry", suite_symmetry},
      {"oracle-sweep", suite_oracle_sweep},
      {"lower-bound", suite_lower_bound},
  };

  CountCache cache(opts.workers);
  bool all_passed = true;
  for (const auto& [name, fn] : suites) {
    VerifySuiteResult r;
    r.name = name;
    try {
      fn(opts, cache, r);
      r.passed = true;
    } catch (const std::exception& e) {
      r.passed = false;
      r.failure = e.what();
    }
    if (r.passed) {
      out << r.name << ": pass (" << r.checks << " checks)\n";
    } else {
      out << r.name << ": FAIL\n" << r.failure << "\n";
      all_passed = false;
    }
    if (results != nullptr) results->push_back(r);
  }
  return all_passed;
}

}  // namespace octa
