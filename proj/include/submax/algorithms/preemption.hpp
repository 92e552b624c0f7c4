#ifndef SUBMAX_ALGORITHMS_PREEMPTION_HPP
#define SUBMAX_ALGORITHMS_PREEMPTION_HPP

#include <memory>

#include "submax/algorithms/common.hpp"
#include "submax/detail/util.hpp"
#include "submax/errors.hpp"
#include "submax/objective.hpp"

namespace submax {

// Buchbinder et al. preemption: like StreamGreedy but single-pass, with the
// dynamic swap threshold c * f(S) / K in place of a fixed nu.
class PreemptionStreaming final : public StreamAlgorithm {
 public:
  PreemptionStreaming(std::uint64_t k, double c, const Objective& objective)
      : k_(k), c_(c), summary_(k), state_(objective.make_state()) {
    if (!(c > 0.0)) throw ConfigError("preemption requires c > 0");
  }

  std::string algorithm_id() const override { return "preemption"; }
  std::uint64_t k() const override { return k_; }

  std::vector<std::pair<std::string, std::string>> extra_config()
      const override {
    return {{"c", detail::fmt_double(c_)}};
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
      const double cutoff =
          c_ * summary_.fvalue() / static_cast<double>(k_);
      if (found && best_gain >= cutoff) {
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
  double c_;
  Summary summary_;
  std::unique_ptr<ObjectiveState> state_;
};

}  // namespace submax

#endif  // SUBMAX_ALGORITHMS_PREEMPTION_HPP
