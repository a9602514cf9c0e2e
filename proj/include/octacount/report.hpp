#pragma once

#include <array>
#include <optional>
#include <string>

#include "octacount/counting.hpp"

namespace octa {

// Machine-readable result record crossing the process boundary. Exact
// integers travel as decimal strings, never as native numbers: the counts
// outgrow every common JSON consumer's number type.
struct OutputRecord {
  std::array<int, 4> sides{};
  std::string method;
  std::string count;  // exact decimal
  std::string terms;  // exact decimal
  long long tiles = 0;
  std::optional<double> entropy;
  long long elapsed_ms = 0;
  int workers = 1;
};

OutputRecord make_record(const CountReport& report, bool with_entropy);

// Single JSON object with sorted keys, newline-terminated.
std::string to_json(const OutputRecord& rec);

// Human-readable block, one field per line, newline-terminated.
std::string to_text(const OutputRecord& rec);

// 6-decimal fixed-point rendering used for entropy values everywhere.
std::string format_entropy(double value);

}  // namespace octa
