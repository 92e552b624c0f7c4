#ifndef SUBMAX_ALGORITHMS_COMMON_HPP
#define SUBMAX_ALGORITHMS_COMMON_HPP

#include <chrono>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "submax/counters.hpp"
#include "submax/data_point.hpp"
#include "submax/objective.hpp"
#include "submax/report.hpp"
#include "submax/summary.hpp"

namespace submax {

// Sieve acceptance rule shared by SieveStreaming, Salsa's sieve rule and
// ThreeSieves (which plugs its current threshold in place of the OPT guess):
// accept e iff gain >= (v/2 - f(S)) / (K - |S|).  Once f(S) >= v/2 the right
// side is non-positive and any non-negative gain passes.
inline bool sieve_accepts(double v, double f_s, std::uint64_t k,
                          std::uint64_t size, double gain) {
  return gain >= (v / 2.0 - f_s) / static_cast<double>(k - size);
}

// One threshold's summary and objective state.
struct SieveCandidate {
  double threshold = 0.0;
  Summary summary;
  std::unique_ptr<ObjectiveState> state;

  SieveCandidate(double threshold_, std::uint64_t k, const Objective& objective)
      : threshold(threshold_), summary(k), state(objective.make_state()) {}

  SieveCandidate(const SieveCandidate& other)
      : threshold(other.threshold),
        summary(other.summary),
        state(other.state->clone()) {}

  SieveCandidate& operator=(const SieveCandidate& other) {
    threshold = other.threshold;
    summary = other.summary;
    state = other.state->clone();
    return *this;
  }

  SieveCandidate(SieveCandidate&&) = default;
  SieveCandidate& operator=(SieveCandidate&&) = default;
};

// A maximizer consuming one item at a time; the harness controls pacing and
// may re-feed a finite dataset under the batch protocol (state is retained
// across passes).  Each run is confined to one execution context.
class StreamAlgorithm {
 public:
  virtual ~StreamAlgorithm() = default;

  virtual std::string algorithm_id() const = 0;

  virtual void offer(const DataPoint& e) = 0;

  // Stream exhausted; algorithms with deferred selection finalize here.
  virtual void finish() {}

  virtual Summary best_summary() const = 0;

  // Committed-item count used for the batch protocol's re-pass decision.
  virtual std::uint64_t selected_count() const {
    return best_summary().size();
  }

  virtual std::uint64_t k() const = 0;
  virtual std::optional<double> epsilon() const { return std::nullopt; }
  virtual std::optional<std::uint64_t> patience() const { return std::nullopt; }
  virtual std::uint64_t seed() const { return 0; }
  virtual std::vector<std::pair<std::string, std::string>> extra_config()
      const {
    return {};
  }

  void begin_pass() {
    ++counters_.passes;
    ++state_version_;
  }

  // Monotone version stamp; bumped on every internal state change so the
  // batch driver can prove a further pass would replay identically.
  std::uint64_t state_version() const { return state_version_; }

  std::uint64_t current_pass() const { return counters_.passes; }
  const RunCounters& counters() const { return counters_; }

  RunReport snapshot() const {
    RunReport report;
    report.algorithm = algorithm_id();
    report.k = k();
    report.epsilon = epsilon();
    report.t = patience();
    report.seed = seed();
    report.summary = best_summary();
    report.fvalue = report.summary.fvalue();
    report.counters = counters_;
    report.extra_config = extra_config();
    return report;
  }

 protected:
  void touch() { ++state_version_; }

  RunCounters counters_;
  std::uint64_t state_version_ = 0;
};

// Feeds each item exactly once.
inline RunReport run_stream(StreamAlgorithm& algo,
                            std::span<const DataPoint> data) {
  const auto start = std::chrono::steady_clock::now();
  algo.begin_pass();
  for (const DataPoint& e : data) {
    algo.offer(e);
  }
  algo.finish();
  RunReport report = algo.snapshot();
  report.wall_time_ms =
      std::chrono::duration<double, std::milli>(
          std::chrono::steady_clock::now() - start)
          .count();
  return report;
}

// Batch protocol: re-feed the dataset with state retained until K items are
// selected, at most K passes.  A pass that provably changed nothing ends the
// loop early, since every further pass would replay it.
inline RunReport run_batch(StreamAlgorithm& algo,
                           std::span<const DataPoint> data) {
  const auto start = std::chrono::steady_clock::now();
  while (true) {
    const std::uint64_t version_before = algo.state_version();
    algo.begin_pass();
    for (const DataPoint& e : data) {
      algo.offer(e);
    }
    if (algo.selected_count() >= algo.k()) break;
    if (algo.current_pass() >= algo.k()) break;
    if (algo.state_version() == version_before + 1) break;  // only begin_pass
  }
  algo.finish();
  RunReport report = algo.snapshot();
  report.wall_time_ms =
      std::chrono::duration<double, std::milli>(
          std::chrono::steady_clock::now() - start)
          .count();
  return report;
}

}  // namespace submax

#endif  // SUBMAX_ALGORITHMS_COMMON_HPP
