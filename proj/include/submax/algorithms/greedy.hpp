#ifndef SUBMAX_ALGORITHMS_GREEDY_HPP
#define SUBMAX_ALGORITHMS_GREEDY_HPP

#include <chrono>
#include <memory>
#include <span>

#include "submax/algorithms/common.hpp"
#include "submax/objective.hpp"

namespace submax {

// Nemhauser-Wolsey greedy: K passes over a finite dataset, each selecting
// the element with the largest marginal gain (lowest ordinal on ties).
// Not streaming-capable; serves as the reference for relative performance.
inline RunReport run_greedy(std::span<const DataPoint> data, std::uint64_t k,
                            const Objective& objective) {
  const auto start = std::chrono::steady_clock::now();

  RunReport report;
  report.algorithm = "greedy";
  report.k = k;

  Summary summary(k);
  std::unique_ptr<ObjectiveState> state = objective.make_state();
  RunCounters& counters = report.counters;

  while (summary.size() < k && summary.size() < data.size()) {
    ++counters.passes;
    bool found = false;
    double best_gain = 0.0;
    const DataPoint* best = nullptr;
    for (const DataPoint& e : data) {
      if (summary.contains(e.ordinal)) continue;
      ++counters.items_processed;
      const double gain = state->peek_gain(e);
      ++counters.oracle_queries;
      if (!found || gain > best_gain) {
        found = true;
        best_gain = gain;
        best = &e;
      }
    }
    if (!found) break;
    const double gain = state->commit(*best);
    summary.push(*best, gain);
    ++counters.commits;
    counters.note_candidates(1);
    counters.note_elements(summary.size());
  }

  report.summary = summary;
  report.fvalue = summary.fvalue();
  report.wall_time_ms =
      std::chrono::duration<double, std::milli>(
          std::chrono::steady_clock::now() - start)
          .count();
  return report;
}

}  // namespace submax

#endif  // SUBMAX_ALGORITHMS_GREEDY_HPP
