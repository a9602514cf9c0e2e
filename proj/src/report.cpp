#include "octacount/report.hpp"

#include <cmath>
#include <cstdio>

#include <json.hpp>

namespace octa {

OutputRecord make_record(const CountReport& report, bool with_entropy) {
  OutputRecord rec;
  rec.sides = {report.sides.a, report.sides.b, report.sides.c, report.sides.d};
  rec.method = report.method;
  rec.count = to_decimal(report.count);
  rec.terms = to_decimal(report.terms_evaluated);
  rec.tiles = tile_count(report.sides);
  if (with_entropy) rec.entropy = entropy(report.sides, report.count);
  rec.elapsed_ms = report.elapsed.count();
  rec.workers = report.workers;
  return rec;
}

std::string format_entropy(double value) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f", value);
  return buf;
}

std::string to_json(const OutputRecord& rec) {
  nlohmann::json j;
  j["sides"] = rec.sides;
  j["method"] = rec.method;
  j["count"] = rec.count;
  j["terms"] = rec.terms;
  j["tiles"] = rec.tiles;
  if (rec.entropy) {
    // Round so that re-serializing a parsed record reproduces the bytes.
    j["entropy"] = std::round(*rec.entropy * 1e6) / 1e6;
  }
  j["elapsed_ms"] = rec.elapsed_ms;
  j["workers"] = rec.workers;
  return j.dump() + "\n";
}

std::string to_text(const OutputRecord& rec) {
  std::string out;
  out += "sides: " + std::to_string(rec.sides[0]) + " " +
         std::to_string(rec.sides[1]) + " " + std::to_string(rec.sides[2]) +
         " " + std::to_string(rec.sides[3]) + "\n";
  out += "method: " + rec.method + "\n";
  out += "count: " + rec.count + "\n";
  out += "terms: " + rec.terms + "\n";
  out += "tiles: " + std::to_string(rec.tiles) + "\n";
  if (rec.entropy) out += "entropy: " + format_entropy(*rec.entropy) + "\n";
  out += "elapsed_ms: " + std::to_string(rec.elapsed_ms) + "\n";
  out += "workers: " + std::to_string(rec.workers) + "\n";
  return out;
}

}  // namespace octa
