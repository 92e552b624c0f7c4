#ifndef SUBMAX_ALGORITHMS_THREE_SIEVES_HPP
#define SUBMAX_ALGORITHMS_THREE_SIEVES_HPP

#include <cstdint>
#include <memory>
#include <optional>

#include "submax/algorithms/common.hpp"
#include "submax/algorithms/m_policy.hpp"
#include "submax/detail/util.hpp"
#include "submax/objective.hpp"
#include "submax/thresholds.hpp"

namespace submax {

// ThreeSieves: a single summary walks the threshold grid downward.  Items
// are accepted under the shared sieve rule with the current threshold; after
// T consecutive rejections the Rule of Three certifies that acceptances have
// become unlikely and the next smaller threshold is popped.  One gain query
// per item, one candidate summary, O(K) elements.
//
// The grid offers no guidance once it is exhausted: selection terminates and
// the partial summary is returned (observed in practice when a stream holds
// fewer acceptable items than K).
//
// With estimated m, an item whose singleton value exceeds the running
// maximum invalidates every prior acceptance: the summary is deleted and
// selection restarts from the top of the grid rebuilt around the new m.
class ThreeSieves final : public StreamAlgorithm {
 public:
  ThreeSieves(std::uint64_t k, double epsilon, RuleOfThreeConfig patience,
              MPolicy m_policy, const Objective& objective)
      : k_(k),
        epsilon_(epsilon),
        patience_cfg_(patience),
        t_max_(patience.resolve()),
        m_policy_(m_policy),
        objective_(objective),
        summary_(k),
        state_(objective.make_state()) {
    if (!(epsilon > 0.0)) throw ConfigError("three-sieves requires eps > 0");
    if (m_policy.is_known()) {
      m_ = m_policy.m;
      restart_grid();
    }
  }

  std::string algorithm_id() const override { return "three-sieves"; }
  std::uint64_t k() const override { return k_; }
  std::optional<double> epsilon() const override { return epsilon_; }
  std::optional<std::uint64_t> patience() const override { return t_max_; }

  std::vector<std::pair<std::string, std::string>> extra_config()
      const override {
    std::vector<std::pair<std::string, std::string>> cfg;
    cfg.emplace_back("m_policy", m_policy_.label());
    if (patience_cfg_.alpha) {
      cfg.emplace_back("alpha", detail::fmt_double(*patience_cfg_.alpha));
      cfg.emplace_back("tau", detail::fmt_double(*patience_cfg_.tau));
    }
    return cfg;
  }

  void offer(const DataPoint& e) override {
    ++counters_.items_processed;
    if (!m_policy_.is_known()) {
      const auto update =
          m_estimator_update(m_, objective_.singleton_value(e));
      if (update.reset_required) {
        m_ = update.m;
        ++counters_.resets;
        summary_.clear();
        state_ = objective_.make_state();
        restart_grid();
        touch();
      }
    }
    if (!threshold_.has_value() || summary_.full()) return;
    if (current_pass() > 1 && summary_.contains(e.ordinal)) return;

    const double gain = state_->peek_gain(e);
    ++counters_.oracle_queries;
    if (sieve_accepts(*threshold_, summary_.fvalue(), k_, summary_.size(),
                      gain)) {
      const double applied = state_->commit(e);
      summary_.push(e, applied);
      ++counters_.commits;
      rejections_ = 0;
    } else {
      ++rejections_;
      if (rejections_ >= t_max_) {
        threshold_ = cursor_->next();
        if (threshold_.has_value()) {
          ++counters_.threshold_drops;
        }
        rejections_ = 0;
      }
    }
    touch();
    counters_.note_candidates(1);
    counters_.note_elements(summary_.size());
  }

  Summary best_summary() const override { return summary_; }

  std::optional<double> current_threshold() const { return threshold_; }

 private:
  void restart_grid() {
    grid_.emplace(m_, k_, epsilon_);
    cursor_.emplace(grid_->descending());
    threshold_ = cursor_->next();
    rejections_ = 0;
  }

  std::uint64_t k_;
  double epsilon_;
  RuleOfThreeConfig patience_cfg_;
  std::uint64_t t_max_;
  MPolicy m_policy_;
  const Objective& objective_;

  double m_ = 0.0;
  std::optional<ThresholdGrid> grid_;
  std::optional<ThresholdGrid::DescendingCursor> cursor_;
  std::optional<double> threshold_;
  std::uint64_t rejections_ = 0;
  Summary summary_;
  std::unique_ptr<ObjectiveState> state_;
};

}  // namespace submax

#endif  // SUBMAX_ALGORITHMS_THREE_SIEVES_HPP
