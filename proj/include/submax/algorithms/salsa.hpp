#ifndef SUBMAX_ALGORITHMS_SALSA_HPP
#define SUBMAX_ALGORITHMS_SALSA_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "submax/algorithms/common.hpp"
#include "submax/detail/util.hpp"
#include "submax/objective.hpp"
#include "submax/thresholds.hpp"

namespace submax {

// Single-pass Salsa: a meta-algorithm pairing every grid threshold v with a
// family of acceptance rules and returning the best candidate overall.
//
// Implemented rule family (a documented single-pass simplification of the
// extended dense/sparse rule catalog):
//   sieve   - the shared adaptive sieve acceptance rule; alone it reduces
//             Salsa to SieveStreaming exactly
//   dense   - fixed cutoff gain >= v / (2K)
//   sparse  - the dense cutoff until position length_hint * (1 - 1/K), then
//             tightened to gain >= v * (K - |S|) / K; requires length_hint
struct SalsaRules {
  bool sieve = true;
  bool dense = true;
  bool sparse = true;

  static SalsaRules sieve_only() { return SalsaRules{true, false, false}; }
  static SalsaRules all() { return SalsaRules{true, true, true}; }
};

class Salsa final : public StreamAlgorithm {
 public:
  Salsa(std::uint64_t k, double epsilon, double m, SalsaRules rules,
        std::optional<std::uint64_t> length_hint, const Objective& objective)
      : k_(k),
        epsilon_(epsilon),
        m_(m),
        rules_(rules),
        length_hint_(length_hint),
        objective_(objective) {
    if (!(m > 0.0)) throw ConfigError("salsa requires known m > 0");
    if (!(epsilon > 0.0)) throw ConfigError("salsa requires eps > 0");
    if (!rules.sieve && !rules.dense && !rules.sparse) {
      throw ConfigError("salsa requires at least one rule");
    }
    sparse_active_ = rules_.sparse && length_hint_.has_value();

    const ThresholdGrid grid(m_, k_, epsilon_);
    auto add_family = [&](Rule rule) {
      if (grid.degenerate()) {
        candidates_.push_back(
            Entry{rule, SieveCandidate(grid.m(), k_, objective_)});
        return;
      }
      for (std::int64_t i = grid.exponent_lo(); i <= grid.exponent_hi(); ++i) {
        candidates_.push_back(
            Entry{rule, SieveCandidate(grid.threshold_at(i), k_, objective_)});
      }
    };
    if (rules_.sieve) add_family(Rule::kSieve);
    if (rules_.dense) add_family(Rule::kDense);
    if (sparse_active_) add_family(Rule::kSparse);
  }

  std::string algorithm_id() const override { return "salsa"; }
  std::uint64_t k() const override { return k_; }
  std::optional<double> epsilon() const override { return epsilon_; }

  std::vector<std::pair<std::string, std::string>> extra_config()
      const override {
    std::string active;
    if (rules_.sieve) active += "sieve";
    if (rules_.dense) active += active.empty() ? "dense" : ",dense";
    if (sparse_active_) active += active.empty() ? "sparse" : ",sparse";
    std::vector<std::pair<std::string, std::string>> cfg;
    cfg.emplace_back("rules", active);
    cfg.emplace_back("length_hint",
                     length_hint_ ? std::to_string(*length_hint_) : "none");
    if (rules_.sparse && !length_hint_) {
      cfg.emplace_back("sparse_rule_disabled", "missing length_hint");
    }
    return cfg;
  }

  void offer(const DataPoint& e) override {
    ++counters_.items_processed;
    const std::uint64_t position = counters_.items_processed;
    const bool check_duplicates = current_pass() > 1;
    for (Entry& entry : candidates_) {
      SieveCandidate& cand = entry.candidate;
      if (cand.summary.full()) continue;
      if (check_duplicates && cand.summary.contains(e.ordinal)) continue;
      const double gain = cand.state->peek_gain(e);
      ++counters_.oracle_queries;
      if (accepts(entry.rule, cand, gain, position)) {
        const double applied = cand.state->commit(e);
        cand.summary.push(e, applied);
        ++counters_.commits;
        touch();
      }
    }
    counters_.note_candidates(candidates_.size());
    std::uint64_t stored = 0;
    for (const Entry& entry : candidates_) {
      stored += entry.candidate.summary.size();
    }
    counters_.note_elements(stored);
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

 private:
  enum class Rule { kSieve, kDense, kSparse };

  struct Entry {
    Rule rule;
    SieveCandidate candidate;
  };

  bool accepts(Rule rule, const SieveCandidate& cand, double gain,
               std::uint64_t position) const {
    const double v = cand.threshold;
    const auto size = static_cast<double>(cand.summary.size());
    const auto kd = static_cast<double>(k_);
    switch (rule) {
      case Rule::kSieve:
        return sieve_accepts(v, cand.summary.fvalue(), k_,
                             cand.summary.size(), gain);
      case Rule::kDense:
        return gain >= v / (2.0 * kd);
      case Rule::kSparse: {
        const double tail_start =
            static_cast<double>(*length_hint_) * (1.0 - 1.0 / kd);
        if (static_cast<double>(position) <= tail_start) {
          return gain >= v / (2.0 * kd);
        }
        return gain >= v * (kd - size) / kd;
      }
    }
    return false;
  }

  std::uint64_t k_;
  double epsilon_;
  double m_;
  SalsaRules rules_;
  std::optional<std::uint64_t> length_hint_;
  bool sparse_active_ = false;
  const Objective& objective_;
  std::vector<Entry> candidates_;
};

}  // namespace submax

#endif  // SUBMAX_ALGORITHMS_SALSA_HPP
