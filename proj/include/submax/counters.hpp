#ifndef SUBMAX_COUNTERS_HPP
#define SUBMAX_COUNTERS_HPP

#include <algorithm>
#include <cstdint>

namespace submax {

// Resource accounting for one run.  Realizes the survey table's "Memory" and
// "Queries per Element" columns as exact counts: peak_elements counts stored
// DataPoints across all live candidate summaries (and buffers), never bytes.
//
// Owned by the run loop, not by the objective state, so a shared objective
// implementation cannot double-count.  Cached f(S) reads and analytic
// singleton bounds are bookkeeping and are not counted as oracle queries.
struct RunCounters {
  std::uint64_t oracle_queries = 0;  // peek-gain, swap-gain, full evaluations
  std::uint64_t commits = 0;         // accepted items
  std::uint64_t peak_candidates = 0; // max simultaneous candidate summaries
  std::uint64_t peak_elements = 0;   // max simultaneous stored DataPoints
  std::uint64_t passes = 0;          // passes over the data
  std::uint64_t threshold_drops = 0; // ThreeSieves only
  std::uint64_t resets = 0;          // m-estimation summary resets
  std::uint64_t items_processed = 0; // items offered to the algorithm

  void note_candidates(std::uint64_t live) {
    peak_candidates = std::max(peak_candidates, live);
  }

  void note_elements(std::uint64_t stored) {
    peak_elements = std::max(peak_elements, stored);
  }
};

}  // namespace submax

#endif  // SUBMAX_COUNTERS_HPP
