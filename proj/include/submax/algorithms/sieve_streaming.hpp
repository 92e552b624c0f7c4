#ifndef SUBMAX_ALGORITHMS_SIEVE_STREAMING_HPP
#define SUBMAX_ALGORITHMS_SIEVE_STREAMING_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "submax/algorithms/common.hpp"
#include "submax/algorithms/m_policy.hpp"
#include "submax/detail/util.hpp"
#include "submax/objective.hpp"
#include "submax/thresholds.hpp"

namespace submax {

// Badanidiyuru et al.: one candidate summary per OPT guess v in the grid
// [m, K*m]; every item is offered to every non-full candidate under the
// sieve acceptance rule; the best candidate wins.  With estimated m the grid
// is regenerated whenever a larger singleton arrives: candidates whose
// threshold leaves the valid range are dropped, new thresholds start empty.
class SieveStreaming final : public StreamAlgorithm {
 public:
  SieveStreaming(std::uint64_t k, double epsilon, MPolicy m_policy,
                 const Objective& objective)
      : k_(k), epsilon_(epsilon), m_policy_(m_policy), objective_(objective) {
    if (!(epsilon > 0.0)) throw ConfigError("sieve-streaming requires eps > 0");
    if (m_policy.is_known()) {
      m_ = m_policy.m;
      rebuild_grid();
    }
  }

  std::string algorithm_id() const override { return "sieve-streaming"; }
  std::uint64_t k() const override { return k_; }
  std::optional<double> epsilon() const override { return epsilon_; }

  std::vector<std::pair<std::string, std::string>> extra_config()
      const override {
    return {{"m_policy", m_policy_.label()}};
  }

  void offer(const DataPoint& e) override {
    ++counters_.items_processed;
    if (!m_policy_.is_known()) {
      const auto update =
          m_estimator_update(m_, objective_.singleton_value(e));
      if (update.reset_required) {
        m_ = update.m;
        ++counters_.resets;
        rebuild_grid();
        touch();
      }
    }
    if (m_ <= 0.0) return;  // nothing observable yet

    const bool check_duplicates = current_pass() > 1;
    for (Entry& entry : candidates_) {
      SieveCandidate& cand = entry.candidate;
      if (cand.summary.full()) continue;
      if (check_duplicates && cand.summary.contains(e.ordinal)) continue;
      const double gain = cand.state->peek_gain(e);
      ++counters_.oracle_queries;
      if (sieve_accepts(cand.threshold, cand.summary.fvalue(), k_,
                        cand.summary.size(), gain)) {
        const double applied = cand.state->commit(e);
        cand.summary.push(e, applied);
        ++counters_.commits;
        touch();
      }
    }
    note_footprint();
  }

  Summary best_summary() const override {
    const SieveCandidate* best = nullptr;
    for (const Entry& entry : candidates_) {
      if (best == nullptr ||
          entry.candidate.summary.fvalue() > best->summary.fvalue()) {
        best = &entry.candidate;
      }
    }
    return best != nullptr ? best->summary : Summary(k_);
  }

  std::uint64_t live_candidates() const { return candidates_.size(); }

  std::vector<std::uint64_t> candidate_sizes() const {
    std::vector<std::uint64_t> sizes;
    sizes.reserve(candidates_.size());
    for (const Entry& entry : candidates_) {
      sizes.push_back(entry.candidate.summary.size());
    }
    return sizes;
  }

 private:
  // candidates are keyed by the grid exponent so regeneration can tell which
  // thresholds survived
  struct Entry {
    std::int64_t exponent;
    SieveCandidate candidate;
  };

  void rebuild_grid() {
    const ThresholdGrid grid(m_, k_, epsilon_);
    std::vector<Entry> next;
    next.reserve(grid.size());
    if (grid.degenerate()) {
      candidates_.clear();
      Entry entry{0, SieveCandidate(grid.m(), k_, objective_)};
      next.push_back(std::move(entry));
      candidates_ = std::move(next);
      was_degenerate_ = true;
      return;
    }
    std::size_t old = 0;
    for (std::int64_t i = grid.exponent_lo(); i <= grid.exponent_hi(); ++i) {
      while (old < candidates_.size() && candidates_[old].exponent < i) ++old;
      if (old < candidates_.size() && candidates_[old].exponent == i &&
          !was_degenerate_) {
        next.push_back(std::move(candidates_[old]));
        ++old;
      } else {
        next.push_back(
            Entry{i, SieveCandidate(grid.threshold_at(i), k_, objective_)});
      }
    }
    was_degenerate_ = grid.degenerate();
    candidates_ = std::move(next);
  }

  void note_footprint() {
    counters_.note_candidates(candidates_.size());
    std::uint64_t stored = 0;
    for (const Entry& entry : candidates_) {
      stored += entry.candidate.summary.size();
    }
    counters_.note_elements(stored);
  }

  std::uint64_t k_;
  double epsilon_;
  MPolicy m_policy_;
  const Objective& objective_;
  double m_ = 0.0;
  bool was_degenerate_ = false;
  std::vector<Entry> candidates_;
};

}  // namespace submax

#endif  // SUBMAX_ALGORITHMS_SIEVE_STREAMING_HPP
