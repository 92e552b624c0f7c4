#ifndef SUBMAX_REPORT_HPP
#define SUBMAX_REPORT_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "submax/counters.hpp"
#include "submax/summary.hpp"

namespace submax {

// Output of one run: the selected summary, its value, the resource counters,
// and the full configuration.  Everything except wall_time_ms is
// reproducible bit-for-bit from (algorithm, config, seed, input).
struct RunReport {
  std::string algorithm;
  std::uint64_t k = 0;
  std::optional<double> epsilon;
  std::optional<std::uint64_t> t;  // ThreeSieves patience
  std::uint64_t seed = 0;
  Summary summary;
  double fvalue = 0.0;
  std::optional<double> relative_perf;  // vs the Greedy reference
  RunCounters counters;
  double wall_time_ms = 0.0;
  // remaining algorithm-specific settings, in a fixed emission order
  std::vector<std::pair<std::string, std::string>> extra_config;
  std::string error;  // non-empty when the cell failed
};

}  // namespace submax

#endif  // SUBMAX_REPORT_HPP
