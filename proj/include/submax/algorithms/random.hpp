#ifndef SUBMAX_ALGORITHMS_RANDOM_HPP
#define SUBMAX_ALGORITHMS_RANDOM_HPP

#include <random>
#include <vector>

#include "submax/algorithms/common.hpp"
#include "submax/detail/util.hpp"
#include "submax/objective.hpp"

namespace submax {

// Uniform baseline via reservoir sampling: the first K items fill the
// reservoir, item i > K replaces slot j when j ~ U[1, i] lands in [1, K].
// The objective is evaluated once, on the final reservoir.
class RandomSelection final : public StreamAlgorithm {
 public:
  RandomSelection(std::uint64_t k, std::uint64_t seed,
                  const Objective& objective)
      : k_(k), seed_(seed), rng_(seed), objective_(objective), result_(k) {
    reservoir_.reserve(k);
  }

  std::string algorithm_id() const override { return "random"; }
  std::uint64_t k() const override { return k_; }
  std::uint64_t seed() const override { return seed_; }

  void offer(const DataPoint& e) override {
    ++counters_.items_processed;
    if (current_pass() > 1) {
      for (const DataPoint& held : reservoir_) {
        if (held.ordinal == e.ordinal) return;
      }
    }
    ++seen_;
    touch();
    if (reservoir_.size() < k_) {
      reservoir_.push_back(e);
      ++counters_.commits;
    } else {
      const std::uint64_t j = detail::uniform_below(rng_, seen_) + 1;
      if (j <= k_) {
        reservoir_[j - 1] = e;
        ++counters_.commits;
      }
    }
    counters_.note_candidates(1);
    counters_.note_elements(reservoir_.size());
  }

  void finish() override {
    result_ = Summary(k_);
    auto state = objective_.make_state();
    for (const DataPoint& e : reservoir_) {
      result_.push(e, state->commit(e));
    }
    // one from-scratch evaluation of the final set
    if (!reservoir_.empty()) ++counters_.oracle_queries;
    finished_ = true;
  }

  Summary best_summary() const override { return result_; }

  std::uint64_t selected_count() const override { return reservoir_.size(); }

  const std::vector<DataPoint>& reservoir() const { return reservoir_; }
  bool finished() const { return finished_; }

 private:
  std::uint64_t k_;
  std::uint64_t seed_;
  std::mt19937_64 rng_;
  const Objective& objective_;
  std::vector<DataPoint> reservoir_;
  std::uint64_t seen_ = 0;
  Summary result_;
  bool finished_ = false;
};

}  // namespace submax

#endif  // SUBMAX_ALGORITHMS_RANDOM_HPP
