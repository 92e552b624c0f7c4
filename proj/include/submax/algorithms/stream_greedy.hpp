#ifndef SUBMAX_ALGORITHMS_STREAM_GREEDY_HPP
#define SUBMAX_ALGORITHMS_STREAM_GREEDY_HPP

#include <chrono>
#include <memory>
#include <span>

#include "submax/algorithms/common.hpp"
#include "submax/detail/util.hpp"
#include "submax/errors.hpp"
#include "submax/objective.hpp"

namespace submax {

// Gomes-Krause swap algorithm: fill to K unconditionally, then replace the
// best victim whenever that improves f(S) by at least the fixed nu.
// Multi-pass by construction; not a proper streaming algorithm.
class StreamGreedy final : public StreamAlgorithm {
 public:
  StreamGreedy(std::uint64_t k, double nu, const Objective& objective)
      : k_(k), nu_(nu), summary_(k), state_(objective.make_state()) {
    if (!(nu > 0.0)) throw ConfigError("stream-greedy requires nu > 0");
  }

  std::string algorithm_id() const override { return "stream-greedy"; }
  std::uint64_t k() const override { return k_; }

  std::vector<std::pair<std::string, std::string>> extra_config()
      const override {
    return {{"nu", detail::fmt_double(nu_)}};
  }

  void offer(const DataPoint& e) override {
    ++counters_.items_processed;
    if (current_pass() > 1 && summary_.contains(e.ordinal)) return;

    if (summary_.size() < k_) {
      const double gain = state_->commit(e);
      summary_.push(e, gain);
      ++counters_.commits;
      touch();
    } else {
      bool found = false;
      double best_gain = 0.0;
      std::size_t victim = 0;
      for (std::size_t idx = 0; idx < summary_.size(); ++idx) {
        const double gain = state_->swap_gain(idx, e);
        ++counters_.oracle_queries;
        if (!found || gain > best_gain) {
          found = true;
          best_gain = gain;
          victim = idx;
        }
      }
      if (found && best_gain >= nu_) {
        const double delta = state_->replace(victim, e);
        summary_.replace(victim, e, delta);
        ++counters_.commits;
        touch();
      }
    }
    counters_.note_candidates(1);
    counters_.note_elements(summary_.size());
  }

  Summary best_summary() const override { return summary_; }

 private:
  std::uint64_t k_;
  double nu_;
  Summary summary_;
  std::unique_ptr<ObjectiveState> state_;
};

// Runs StreamGreedy's own pass protocol: up to max_passes passes, stopping
// early after a pass that changed nothing.
inline RunReport run_stream_greedy(std::span<const DataPoint> data,
                                   std::uint64_t k, double nu,
                                   std::uint64_t max_passes,
                                   const Objective& objective) {
  if (max_passes < 1) throw ConfigError("stream-greedy needs max_passes >= 1");
  const auto start = std::chrono::steady_clock::now();
  StreamGreedy algo(k, nu, objective);
  for (std::uint64_t pass = 0; pass < max_passes; ++pass) {
    const std::uint64_t version_before = algo.state_version();
    algo.begin_pass();
    for (const DataPoint& e : data) {
      algo.offer(e);
    }
    if (algo.state_version() == version_before + 1) break;
  }
  RunReport report = algo.snapshot();
  report.wall_time_ms =
      std::chrono::duration<double, std::milli>(
          std::chrono::steady_clock::now() - start)
          .count();
  return report;
}

}  // namespace submax

#endif  // SUBMAX_ALGORITHMS_STREAM_GREEDY_HPP
