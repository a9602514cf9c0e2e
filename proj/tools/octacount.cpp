// octacount: exact rhombus-tiling counts for centro-symmetric octagons.
//
// Subcommands: count, verify, table, entropy, hex. Exit codes: 0 success,
// 1 verification failure, 2 usage error, 3 method inapplicable, 4 work
// budget exceeded.

#include <cinttypes>
#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "octacount/counting.hpp"
#include "octacount/oracle.hpp"
#include "octacount/report.hpp"
#include "octacount/sides.hpp"
#include "octacount/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInapplicable = 3;
constexpr int kExitBudget = 4;

// Above this many summands the run is legal but probably not what the user
// meant interactively; warn and keep going.
const octa::BigNat kWarnTerms(100'000'000);

// `table` rows larger than this are skipped instead of hanging the terminal.
const octa::BigNat kTableTermBudget(5'000'000);

octa::Sides to_sides(const std::vector<long long>& raw) {
  return octa::Sides::checked(raw[0], raw[1], raw[2], raw[3]);
}

void print_progress(std::uint64_t done, std::uint64_t total) {
  std::fprintf(stderr, "progress: %" PRIu64 "/%" PRIu64 " terms\n", done,
               total);
}

int run_count(const std::vector<long long>& raw, const std::string& method,
              int workers, bool json, bool progress) {
  const octa::Sides sides = to_sides(raw);
  octa::CountReport report;

  if (method == "elnitsky") {
    auto closed = octa::elnitsky_count(sides);
    if (!closed) {
      std::cerr << "octacount: method inapplicable: the closed forms need a "
                   "pair of opposite or adjacent unit sides\n";
      return kExitInapplicable;
    }
    report = std::move(*closed);
  } else if (method == "oracle") {
    report = octa::oracle_count_tilings(sides);
  } else {
    const octa::BigNat terms = octa::grid_sum_terms(sides);
    if (terms > kWarnTerms) {
      std::cerr << "octacount: warning: " << terms.get_str()
                << " terms to evaluate; this run may take a very long time\n";
    }
    octa::CountOptions opts;
    opts.workers = workers;
    if (progress) opts.progress = print_progress;
    report = octa::count_tilings(sides, opts);
  }

  const octa::OutputRecord rec = octa::make_record(report, true);
  std::cout << (json ? octa::to_json(rec) : octa::to_text(rec));
  return kExitOk;
}

int run_verify(int max_side, int workers) {
  octa::VerifyOptions opts;
  opts.max_side = max_side;
  opts.workers = workers;
  return octa::run_verify_suites(opts, std::cout) ? kExitOk
                                                  : kExitVerifyFailed;
}

std::string format_fixed(double value, int digits) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.*f", digits, value);
  return buf;
}

int run_table(int diagonal, bool csv, int workers) {
  if (csv) std::cout << "n,count,tiles,entropy\n";
  for (int n = 1; n <= diagonal; ++n) {
    const octa::Sides sides{n, n, n, n};
    const long long tiles = octa::tile_count(sides);
    const octa::BigNat terms = octa::grid_sum_terms(sides);
    if (terms > kTableTermBudget) {
      if (csv) {
        std::cout << n << ",skipped (budget),"<< tiles << ",\n";
      } else {
        std::cout << n << "  skipped (budget: " << terms.get_str()
                  << " terms)\n";
      }
      continue;
    }
    octa::CountOptions opts;
    opts.workers = workers;
    const octa::CountReport report = octa::count_tilings(sides, opts);
    const std::string ent = format_fixed(octa::entropy(sides, report.count), 4);
    if (csv) {
      std::cout << n << "," << octa::to_decimal(report.count) << "," << tiles
                << "," << ent << "\n";
    } else {
      std::cout << n << "  " << octa::to_decimal(report.count) << "  "
                << tiles << "  " << ent << "\n";
    }
  }
  return kExitOk;
}

int run_entropy(const std::vector<long long>& raw, int workers) {
  const octa::Sides sides = to_sides(raw);
  octa::BigNat count;
  const bool diagonal =
      sides.a == sides.b && sides.b == sides.c && sides.c == sides.d;
  std::optional<octa::BigNat> ref;
  if (diagonal) ref = octa::reference_diagonal_count(sides.a);
  if (ref) {
    count = std::move(*ref);
  } else {
    const octa::BigNat terms = octa::grid_sum_terms(sides);
    if (terms > kWarnTerms) {
      std::cerr << "octacount: warning: " << terms.get_str()
                << " terms to evaluate; this run may take a very long time\n";
    }
    octa::CountOptions opts;
    opts.workers = workers;
    count = octa::count_tilings(sides, opts).count;
  }
  std::cout << format_fixed(octa::entropy(sides, count), 6) << "\n";
  return kExitOk;
}

int run_hex(const std::vector<long long>& hex_sides,
            const std::vector<long long>& bound) {
  if (!bound.empty()) {
    if (!hex_sides.empty()) {
      std::cerr << "octacount: give either three hexagon sides or --bound "
                   "with four octagon sides, not both\n";
      return kExitUsage;
    }
    const octa::Sides sides = to_sides(bound);
    std::cout << octa::to_decimal(octa::lower_bound(sides)) << "\n";
    return kExitOk;
  }
  if (hex_sides.size() != 3) {
    std::cerr << "octacount: hex needs three sides (or --bound a b c d)\n";
    return kExitUsage;
  }
  for (long long v : hex_sides) {
    if (v < 0 || v > 1'000'000) {
      std::cerr << "octacount: hexagon sides must be in [0, 1000000]\n";
      return kExitUsage;
    }
  }
  std::cout << octa::to_decimal(
                   octa::hex_count(static_cast<int>(hex_sides[0]),
                                   static_cast<int>(hex_sides[1]),
                                   static_cast<int>(hex_sides[2])))
            << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact rhombus-tiling counts for centro-symmetric octagons"};
  app.require_subcommand(1);

  std::vector<long long> sides;
  std::string method = "det";
  int workers = 0;  // 0: OCTACOUNT_WORKERS, then machine parallelism
  bool json = false;
  bool progress = false;
  int max_side = 2;
  int diagonal = 1;
  bool csv = false;
  std::vector<long long> hex_sides;
  std::vector<long long> bound;

  CLI::App* cmd_count = app.add_subcommand("count", "Exact tiling count");
  cmd_count->add_option("sides", sides, "Side lengths a b c d")
      ->expected(4)
      ->required()
      ->check(CLI::PositiveNumber);
  cmd_count->add_option("--method", method, "det, oracle, or elnitsky")
      ->check(CLI::IsMember({"det", "oracle", "elnitsky"}));
  cmd_count->add_option("--workers", workers, "Worker threads (default: auto)");
  cmd_count->add_flag("--json", json, "Emit a single JSON object");
  cmd_count->add_flag("--progress", progress,
                      "Periodic term counter on standard error");

  CLI::App* cmd_verify =
      app.add_subcommand("verify", "Run the cross-method verification suites");
  cmd_verify->add_option("--max-side", max_side, "Largest side to sweep")
      ->check(CLI::PositiveNumber);
  cmd_verify->add_option("--workers", workers,
                         "Worker threads (default: auto)");

  CLI::App* cmd_table =
      app.add_subcommand("table", "Counts for the diagonal family n n n n");
  cmd_table->add_option("--diagonal", diagonal, "Largest n")
      ->required()
      ->check(CLI::PositiveNumber);
  cmd_table->add_flag("--csv", csv, "CSV with header instead of columns");
  cmd_table->add_option("--workers", workers, "Worker threads (default: auto)");

  CLI::App* cmd_entropy =
      app.add_subcommand("entropy", "Configurational entropy per tile");
  cmd_entropy->add_option("sides", sides, "Side lengths a b c d")
      ->expected(4)
      ->required()
      ->check(CLI::PositiveNumber);
  cmd_entropy->add_option("--workers", workers,
                          "Worker threads (default: auto)");

  CLI::App* cmd_hex = app.add_subcommand(
      "hex", "Hexagon tiling count, or the octagon lower bound");
  cmd_hex->add_option("sides", hex_sides, "Hexagon side lengths p q r")
      ->expected(0, 3);
  cmd_hex->add_option("--bound", bound,
                      "Print the two-hexagon lower bound for octagon a b c d")
      ->expected(4)
      ->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);  // prints the error and a usage hint to standard error
    return kExitUsage;
  }

  try {
    if (cmd_count->parsed()) {
      return run_count(sides, method, workers, json, progress);
    }
    if (cmd_verify->parsed()) return run_verify(max_side, workers);
    if (cmd_table->parsed()) return run_table(diagonal, csv, workers);
    if (cmd_entropy->parsed()) return run_entropy(sides, workers);
    if (cmd_hex->parsed()) return run_hex(hex_sides, bound);
  } catch (const octa::OracleBudgetError& e) {
    std::cerr << "octacount: " << e.what() << "\n";
    return kExitBudget;
  } catch (const std::invalid_argument& e) {
    std::cerr << "octacount: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "octacount: internal error: " << e.what() << "\n";
    return 10;
  }
  return kExitUsage;
}
