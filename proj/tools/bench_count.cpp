// Benchmark: definition-direct serial counting versus the chunked parallel
// implementation, on one octagon. Both must produce the same exact count.

#include <cstdio>
#include <cstdlib>
#include <string>

#include "octacount/counting.hpp"

int main(int argc, char** argv) {
  long long raw[4] = {2, 2, 2, 2};
  if (argc == 5) {
    for (int i = 0; i < 4; ++i) raw[i] = std::atoll(argv[i + 1]);
  } else if (argc != 1) {
    std::fprintf(stderr, "usage: %s [a b c d]\n", argv[0]);
    return 2;
  }

  octa::Sides sides;
  try {
    sides = octa::Sides::checked(raw[0], raw[1], raw[2], raw[3]);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "%s\n", e.what());
    return 2;
  }

  std::printf("octagon %d %d %d %d, %s terms\n", sides.a, sides.b, sides.c,
              sides.d, octa::to_decimal(octa::grid_sum_terms(sides)).c_str());

  const octa::CountReport serial = octa::count_tilings_serial(sides);
  std::printf("%-18s %8lld ms   count %s\n", "serial-reference",
              static_cast<long long>(serial.elapsed.count()),
              octa::to_decimal(serial.count).c_str());

  bool ok = true;
  for (const int workers : {1, 0}) {
    octa::CountOptions opts;
    opts.workers = workers;
    const octa::CountReport par = octa::count_tilings(sides, opts);
    const std::string label = "parallel-" + std::to_string(par.workers);
    std::printf("%-18s %8lld ms   count %s\n", label.c_str(),
                static_cast<long long>(par.elapsed.count()),
                octa::to_decimal(par.count).c_str());
    if (par.count != serial.count) {
      std::printf("MISMATCH against the serial reference\n");
      ok = false;
    }
  }
  return ok ? 0 : 1;
}
