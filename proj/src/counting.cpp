#include "octacount/counting.hpp"

#include <algorithm>
#include <atomic>
#include <cassert>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <mutex>
#include <numbers>
#include <span>
#include <stdexcept>
#include <thread>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "octacount/binomial.hpp"
#include "octacount/determinant.hpp"
#include "octacount/plane_partitions.hpp"
#include "octacount/grid.hpp"
#include "octacount/term_matrix.hpp"

namespace octa {

namespace {

using Clock = std::chrono::steady_clock;

void validate(const Sides& s) {
  // Re-validate even typed input: aggregate initialization can bypass
  // Sides::checked.
  Sides::checked(s.a, s.b, s.c, s.d);
}

std::chrono::milliseconds since(Clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() -
                                                               start);
}

std::uint64_t to_u64_checked(const BigNat& v, const char* what) {
  if (!v.fits_ulong_p()) {
    throw std::overflow_error(std::string(what) + " exceeds 64-bit range");
  }
  return v.get_ui();
}

int resolve_workers(int requested) {
  int w = requested;
  if (w <= 0) {
    if (const char* env = std::getenv("OCTACOUNT_WORKERS")) {
      w = std::atoi(env);
    }
  }
  if (w <= 0) {
#ifdef _OPENMP
    w = omp_get_max_threads();
#else
    w = static_cast<int>(std::thread::hardware_concurrency());
#endif
  }
  return std::clamp(w, 1, 256);
}

// Evaluates one summand at a time with scratch buffers that are allocated
// once per worker; after warm-up the inner loop does not touch the allocator.
class TermEvaluator {
 public:
  TermEvaluator(const Sides& s, const BinomialTable& table)
      : sides_(s),
        table_(table),
        sw_cells_(static_cast<std::size_t>(s.b) * s.b),
        nw_cells_(static_cast<std::size_t>(s.d) * s.d) {}

  // Adds det-product(x, y) into acc.
  void accumulate(const VertexGridX& x, const VertexGridY& y, BigNat& acc) {
    term_ = 1;
    bool zero = false;
    for (int u = 1; u <= sides_.d + 1 && !zero; ++u) {
      fill_sw_path_matrix(u, x, y, table_, sw_cells_.data());
      zero = !multiply_in_det(std::span(sw_cells_), sides_.b);
    }
    for (int v = 1; v <= sides_.b + 1 && !zero; ++v) {
      fill_nw_path_matrix(v, x, y, table_, nw_cells_.data());
      zero = !multiply_in_det(std::span(nw_cells_), sides_.d);
    }
    if (!zero) acc += term_;
  }

  std::uint64_t determinants_evaluated = 0;
  std::uint64_t nonpositive_determinants = 0;

 private:
  // Returns false when the determinant is zero and the summand dies.
  bool multiply_in_det(std::span<BigInt> cells, int order) {
    const BigInt& det = scratch_.det_destructive(cells, order);
    ++determinants_evaluated;
    const int s = sgn(det);
    if (s <= 0) {
      ++nonpositive_determinants;
      // The counting identity promises strictly positive determinants; zero
      // is tolerated (the summand vanishes), negative flags a convention bug.
      assert(s == 0 && "path-matrix determinant must not be negative");
      if (s == 0) return false;
    }
    term_ *= det;
    return true;
  }

  Sides sides_;
  const BinomialTable& table_;
  std::vector<BigInt> sw_cells_;
  std::vector<BigInt> nw_cells_;
  DetScratch scratch_;
  BigInt term_;
};

std::uint64_t chunk_begin(std::uint64_t total, int workers, int index) {
  return static_cast<std::uint64_t>(
      static_cast<unsigned __int128>(total) * index / workers);
}

}  // namespace

CountReport count_tilings(const Sides& sides, const CountOptions& opts) {
  validate(sides);
  const auto start = Clock::now();

  CountReport report;
  report.sides = sides;
  report.method = "det";

  const BigNat nx_big = count_grids_x(sides);
  const BigNat ny_big = count_grids_y(sides);
  report.terms_evaluated = nx_big * ny_big;
  const std::uint64_t nx = to_u64_checked(nx_big, "x-grid count");
  const std::uint64_t ny = to_u64_checked(ny_big, "y-grid count");

  int workers = resolve_workers(opts.workers);
  if (static_cast<std::uint64_t>(workers) > nx) {
    workers = static_cast<int>(nx);
  }
  workers = std::max(workers, 1);
  report.workers = workers;

  // Read-only after this point; shared by all workers.
  const BinomialTable table(sides.a + sides.c);

  const unsigned __int128 total_wide =
      static_cast<unsigned __int128>(nx) * ny;
  const std::uint64_t total_terms =
      total_wide > UINT64_MAX ? UINT64_MAX
                              : static_cast<std::uint64_t>(total_wide);
  std::atomic<std::uint64_t> terms_done{0};
  std::mutex progress_mu;
  Clock::time_point last_report = start;

  // One contiguous x-rank chunk per worker; each worker accumulates a private
  // partial sum, so the final left-to-right combination is identical for
  // every worker count.
  std::vector<BigNat> partials(workers);
  std::vector<std::uint64_t> dets(workers, 0);
  std::vector<std::uint64_t> nonpos(workers, 0);

#ifdef _OPENMP
#pragma omp parallel for schedule(static) num_threads(workers)
#endif
  for (int t = 0; t < workers; ++t) {
    const std::uint64_t lo = chunk_begin(nx, workers, t);
    const std::uint64_t hi = chunk_begin(nx, workers, t + 1);
    if (lo >= hi) continue;

    TermEvaluator eval(sides, table);
    BigNat local = 0;
    XCursor xc(sides);
    xc.seek(lo);
    for (std::uint64_t xi = lo; xi < hi; ++xi) {
      YCursor yc(sides);
      do {
        eval.accumulate(xc.grid(), yc.grid(), local);
      } while (yc.advance());
      if (xi + 1 < hi) xc.advance();

      terms_done.fetch_add(ny, std::memory_order_relaxed);
      if (opts.progress && progress_mu.try_lock()) {
        const auto now = Clock::now();
        if (now - last_report >= opts.progress_interval) {
          last_report = now;
          opts.progress(terms_done.load(std::memory_order_relaxed),
                        total_terms);
        }
        progress_mu.unlock();
      }
    }
    partials[t] = std::move(local);
    dets[t] = eval.determinants_evaluated;
    nonpos[t] = eval.nonpositive_determinants;
  }

  BigNat total = 0;
  for (int t = 0; t < workers; ++t) {
    total += partials[t];
    report.determinants_evaluated += dets[t];
    report.nonpositive_determinants += nonpos[t];
  }
  if (opts.progress) opts.progress(total_terms, total_terms);

  report.count = std::move(total);
  report.elapsed = since(start);
  return report;
}

CountReport count_tilings_serial(const Sides& sides) {
  validate(sides);
  const auto start = Clock::now();

  CountReport report;
  report.sides = sides;
  report.method = "det-serial";
  report.workers = 1;

  // Straight from the definition: build every matrix afresh and take plain
  // determinants. The parallel path must reproduce this bit for bit.
  const BinomialTable table(sides.a + sides.c);
  BigNat total = 0;
  BigNat terms = 0;
  XCursor xc(sides);
  do {
    YCursor yc(sides);
    do {
      BigInt term = 1;
      for (int u = 1; u <= sides.d + 1; ++u) {
        term *= det_exact(sw_path_matrix(u, xc.grid(), yc.grid(), table));
      }
      for (int v = 1; v <= sides.b + 1; ++v) {
        term *= det_exact(nw_path_matrix(v, xc.grid(), yc.grid(), table));
      }
      total += term;
      ++terms;
    } while (yc.advance());
  } while (xc.advance());

  report.count = std::move(total);
  report.terms_evaluated = std::move(terms);
  report.elapsed = since(start);
  return report;
}

BigNat grid_sum_terms(const Sides& sides) {
  validate(sides);
  return BigNat(count_grids_x(sides) * count_grids_y(sides));
}

BigNat elnitsky_a1c1(int a, int c) {
  if (a < 0 || c < 0) throw std::invalid_argument("sides must be nonnegative");
  BigNat total = 0;
  for (int r = 0; r <= a; ++r) {
    const int s = a - r;
    for (int t = 0; t <= c; ++t) {
      const int u = c - t;
      total += binomial(r + t, r) * binomial(s + t, s) * binomial(r + u, r) *
               binomial(s + u, s);
    }
  }
  return total;
}

BigNat elnitsky_ab11(int a, int b) {
  if (a < 0 || b < 0) throw std::invalid_argument("sides must be nonnegative");
  const BigNat num(2 * factorial(a + b + 1) * factorial(a + b + 2));
  const BigNat den(factorial(a) * factorial(b) * factorial(a + 2) *
                   factorial(b + 2));
  if (mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t()) == 0) {
    throw std::logic_error("closed form produced a non-integer");
  }
  BigNat result;
  mpz_divexact(result.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return result;
}

BigNat elnitsky_simplified(int a, int c) {
  if (a < 1 || c < 1) throw std::invalid_argument("sides must be positive");
  Rational inner = 0;
  for (int k = 0; k <= a; ++k) {
    Rational term{BigNat(binomial(a, k) * binomial(c, k))};
    term /= 2 * k - 1;  // the k = 0 denominator is -1 by design
    inner += term;
  }
  const BigNat fac_sum1 = factorial(a + c + 1);
  const BigNat fac_a = factorial(a);
  const BigNat fac_c = factorial(c);

  Rational bracket{BigNat(2 * fac_sum1)};
  bracket /= fac_a;
  bracket /= fac_c;
  bracket += inner;

  Rational prefactor{fac_sum1};
  prefactor /= fac_a;
  prefactor /= fac_c;
  prefactor /= 2 * a + 1;
  prefactor /= 2 * c + 1;

  const Rational total = prefactor * bracket;
  if (total.get_den() != 1) {
    throw std::logic_error("simplified closed form produced a non-integer");
  }
  return total.get_num();
}

std::optional<CountReport> elnitsky_count(const Sides& s) {
  const auto start = Clock::now();
  CountReport r;
  r.sides = s;
  r.workers = 1;
  // Prefer the opposite-unit-pair form; fall back to the rotations of the
  // adjacent-unit-pair form. Rotating or reflecting side labels does not
  // change the tiling count.
  if (s.b == 1 && s.d == 1) {
    r.method = "elnitsky-a1c1";
    r.count = elnitsky_a1c1(s.a, s.c);
    r.terms_evaluated = BigNat((s.a + 1)) * (s.c + 1);
  } else if (s.a == 1 && s.c == 1) {
    r.method = "elnitsky-a1c1";
    r.count = elnitsky_a1c1(s.b, s.d);
    r.terms_evaluated = BigNat((s.b + 1)) * (s.d + 1);
  } else if (s.c == 1 && s.d == 1) {
    r.method = "elnitsky-ab11";
    r.count = elnitsky_ab11(s.a, s.b);
    r.terms_evaluated = 1;
  } else if (s.d == 1 && s.a == 1) {
    r.method = "elnitsky-ab11";
    r.count = elnitsky_ab11(s.b, s.c);
    r.terms_evaluated = 1;
  } else if (s.a == 1 && s.b == 1) {
    r.method = "elnitsky-ab11";
    r.count = elnitsky_ab11(s.c, s.d);
    r.terms_evaluated = 1;
  } else if (s.b == 1 && s.c == 1) {
    r.method = "elnitsky-ab11";
    r.count = elnitsky_ab11(s.d, s.a);
    r.terms_evaluated = 1;
  } else {
    return std::nullopt;
  }
  r.elapsed = since(start);
  return r;
}

BigNat hex_count(int p, int q, int r) { return box_plane_partitions(p, q, r); }

BigNat lower_bound(const Sides& s) {
  validate(s);
  return BigNat(hex_count(s.b, s.d, s.c) * hex_count(s.b, s.d, s.a));
}

double entropy(const Sides& sides, const BigNat& count) {
  validate(sides);
  if (count < 1) {
    throw std::domain_error("entropy requires a count of at least 1");
  }
  // ln(count) from the bignum's top bits: count = mant * 2^exp with
  // mant in [0.5, 1), both exactly recoverable, so the relative error is
  // that of double log() itself.
  long exp2 = 0;
  const double mant = mpz_get_d_2exp(&exp2, count.get_mpz_t());
  const double ln =
      std::log(mant) + static_cast<double>(exp2) * std::numbers::ln2;
  return ln / static_cast<double>(tile_count(sides));
}

double hexagon_entropy_limit() {
  return 1.5 * std::log(3.0) - 2.0 * std::numbers::ln2;
}

std::optional<BigNat> reference_diagonal_count(int n) {
  switch (n) {
    case 1:
      return BigNat(8);
    case 2:
      return BigNat(5383);
    case 3:
      return BigNat(273976272);
    case 4:
      return BigNat("1043065776718923");
    case 5:
      return BigNat("296755610108278480324496");
    default:
      return std::nullopt;
  }
}

}  // namespace octa
