#ifndef SUBMAX_ALGORITHMS_INDEPENDENT_SET_IMPROVEMENT_HPP
#define SUBMAX_ALGORITHMS_INDEPENDENT_SET_IMPROVEMENT_HPP

#include <memory>
#include <set>
#include <utility>
#include <vector>

#include "submax/algorithms/common.hpp"
#include "submax/objective.hpp"

namespace submax {

// Chakrabarti-Kale improvement: every item is weighted by its marginal gain
// at the moment of arrival, the weight is never updated afterwards.  Below
// capacity items are accepted unconditionally; at capacity the minimum-weight
// item is replaced when the newcomer weighs more than twice as much.
class IndependentSetImprovement final : public StreamAlgorithm {
 public:
  IndependentSetImprovement(std::uint64_t k, const Objective& objective)
      : k_(k), summary_(k), state_(objective.make_state()) {}

  std::string algorithm_id() const override { return "isi"; }
  std::uint64_t k() const override { return k_; }

  void offer(const DataPoint& e) override {
    ++counters_.items_processed;
    if (current_pass() > 1 && summary_.contains(e.ordinal)) return;

    const double weight = state_->peek_gain(e);
    ++counters_.oracle_queries;

    if (summary_.size() < k_) {
      const double gain = state_->commit(e);
      summary_.push(e, gain);
      weights_.insert({weight, e.ordinal});
      by_position_.push_back({weight, e.ordinal});
      ++counters_.commits;
      touch();
    } else {
      const auto [min_weight, min_ordinal] = *weights_.begin();
      if (weight > 2.0 * min_weight) {
        std::size_t pos = 0;
        while (by_position_[pos].second != min_ordinal) ++pos;
        const double delta = state_->replace(pos, e);
        ++counters_.oracle_queries;  // re-evaluation of the modified set
        summary_.replace(pos, e, delta);
        weights_.erase(weights_.begin());
        weights_.insert({weight, e.ordinal});
        by_position_[pos] = {weight, e.ordinal};
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
  Summary summary_;
  std::unique_ptr<ObjectiveState> state_;
  // min-weight retrieval keyed by (weight, ordinal); ordinal breaks ties
  std::set<std::pair<double, std::uint64_t>> weights_;
  std::vector<std::pair<double, std::uint64_t>> by_position_;
};

}  // namespace submax

#endif  // SUBMAX_ALGORITHMS_INDEPENDENT_SET_IMPROVEMENT_HPP
