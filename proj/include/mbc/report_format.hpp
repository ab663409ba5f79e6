#pragma once

// Text renderings of factorization reports and layer splits. Output is
// byte-stable for a fixed input.
//
// Records mode, one factor per line:
//   <prime> <exponent> layers=<j1,j2,...|-> <provenance>
// e.g. "3 2 layers=1,2 direct" or "7 1 layers=1 interval(1,1)".

#include <string>
#include <string_view>
#include <vector>

#include "mbc/factorizer.hpp"

namespace mbc {

enum class OutputMode { human, records };

std::string format_report(const FactorizationReport& r, OutputMode mode);

// key=value counters, one per line.
std::string format_summary(const FactorizationReport& r);

// Layers top-down; empty layers are listed as such and collected at the end.
std::string format_layer_split(const LayerSplit& split);
std::string format_layer_summary(const LayerSplit& split);

struct RecordLine {
  u64 prime = 0;
  unsigned exponent = 0;
  std::vector<unsigned> layers;
  std::string provenance;

  friend bool operator==(const RecordLine&, const RecordLine&) = default;
};

// Inverse of records mode. Throws std::invalid_argument on a malformed line.
std::vector<RecordLine> parse_records(std::string_view text);

}  // namespace mbc
