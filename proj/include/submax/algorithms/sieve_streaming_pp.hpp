#ifndef SUBMAX_ALGORITHMS_SIEVE_STREAMING_PP_HPP
#define SUBMAX_ALGORITHMS_SIEVE_STREAMING_PP_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <vector>

#include "submax/algorithms/common.hpp"
#include "submax/algorithms/m_policy.hpp"
#include "submax/objective.hpp"
#include "submax/thresholds.hpp"

namespace submax {

// Kazemi et al.: candidates carry fixed marginal-gain cutoffs v (an item
// joins S_v iff its gain is at least v) instead of adaptive OPT-guess rules.
// The best candidate value LB lower-bounds OPT, so cutoffs at or below
// tau_min = max(LB, m)/(2K) can never belong to a near-optimal sieve and are
// dropped; missing ladder cutoffs in (tau_min, m] are instantiated lazily.
// Same guarantee as SieveStreaming on a strictly smaller element footprint
// once LB rises above m.
class SieveStreamingPP final : public StreamAlgorithm {
 public:
  SieveStreamingPP(std::uint64_t k, double epsilon, MPolicy m_policy,
                   const Objective& objective)
      : k_(k), epsilon_(epsilon), m_policy_(m_policy), objective_(objective) {
    if (!(epsilon > 0.0)) {
      throw ConfigError("sieve-streaming++ requires eps > 0");
    }
    if (m_policy.is_known()) m_ = m_policy.m;
  }

  std::string algorithm_id() const override { return "sieve-streaming-pp"; }
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
        touch();
      }
    }
    if (m_ <= 0.0) return;

    const double tau_min =
        std::max(lower_bound_, m_) / (2.0 * static_cast<double>(k_));
    prune(tau_min);
    instantiate(tau_min);

    const bool check_duplicates = current_pass() > 1;
    for (Entry& entry : candidates_) {
      SieveCandidate& cand = entry.candidate;
      if (cand.summary.full()) continue;
      if (check_duplicates && cand.summary.contains(e.ordinal)) continue;
      const double gain = cand.state->peek_gain(e);
      ++counters_.oracle_queries;
      if (gain >= cand.threshold) {
        const double applied = cand.state->commit(e);
        cand.summary.push(e, applied);
        ++counters_.commits;
        if (cand.summary.fvalue() > lower_bound_) {
          lower_bound_ = cand.summary.fvalue();
        }
        touch();
      }
    }
    note_footprint();
    // LB may have risen during the acceptance loop
    prune(std::max(lower_bound_, m_) / (2.0 * static_cast<double>(k_)));
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

  double lower_bound() const { return lower_bound_; }
  std::uint64_t live_candidates() const { return candidates_.size(); }

  std::vector<double> candidate_thresholds() const {
    std::vector<double> thresholds;
    thresholds.reserve(candidates_.size());
    for (const Entry& entry : candidates_) {
      thresholds.push_back(entry.candidate.threshold);
    }
    return thresholds;
  }

 private:
  struct Entry {
    std::int64_t exponent;
    SieveCandidate candidate;
  };

  double power(std::int64_t i) const {
    return std::pow(1.0 + epsilon_, static_cast<double>(i));
  }

  void prune(double tau_min) {
    auto kept = std::remove_if(
        candidates_.begin(), candidates_.end(),
        [&](const Entry& entry) { return entry.candidate.threshold <= tau_min; });
    if (kept != candidates_.end()) {
      candidates_.erase(kept, candidates_.end());
      touch();
    }
  }

  void instantiate(double tau_min) {
    const double log_base = std::log1p(epsilon_);
    // smallest exponent with (1+eps)^i > tau_min, largest with <= m
    std::int64_t lo =
        static_cast<std::int64_t>(std::floor(std::log(tau_min) / log_base));
    while (power(lo) <= tau_min) ++lo;
    while (lo > INT64_MIN + 1 && power(lo - 1) > tau_min) --lo;
    std::int64_t hi =
        static_cast<std::int64_t>(std::floor(std::log(m_) / log_base));
    while (power(hi + 1) <= m_) ++hi;
    while (power(hi) > m_) --hi;
    if (lo > hi) return;

    std::vector<Entry> next;
    next.reserve(static_cast<std::size_t>(hi - lo + 1));
    std::size_t old = 0;
    for (std::int64_t i = lo; i <= hi; ++i) {
      while (old < candidates_.size() && candidates_[old].exponent < i) {
        next.push_back(std::move(candidates_[old]));
        ++old;
      }
      if (old < candidates_.size() && candidates_[old].exponent == i) {
        next.push_back(std::move(candidates_[old]));
        ++old;
      } else {
        next.push_back(Entry{i, SieveCandidate(power(i), k_, objective_)});
        touch();
      }
    }
    while (old < candidates_.size()) {
      next.push_back(std::move(candidates_[old]));
      ++old;
    }
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
  double lower_bound_ = 0.0;
  std::vector<Entry> candidates_;
};

}  // namespace submax

#endif  // SUBMAX_ALGORITHMS_SIEVE_STREAMING_PP_HPP
