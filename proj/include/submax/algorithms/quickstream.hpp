#ifndef SUBMAX_ALGORITHMS_QUICKSTREAM_HPP
#define SUBMAX_ALGORITHMS_QUICKSTREAM_HPP

#include <cmath>
#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <vector>

#include "submax/algorithms/common.hpp"
#include "submax/detail/util.hpp"
#include "submax/errors.hpp"
#include "submax/objective.hpp"

namespace submax {

// Kuhnle's QuickStream: buffers c items and evaluates f once per buffer.
// A buffer C joins the working set A when f(A u C) - f(A) >= f(A)/K; A is
// trimmed to its most recent c*l*(K+1)*log2(K) items once it doubles that,
// with l = ceil(log2(1/(4 eps))) + 3.  After the stream, the c*K most recent
// items of A are randomly split into at most c sets of at most K and the
// best set is returned.
class QuickStream final : public StreamAlgorithm {
 public:
  QuickStream(std::uint64_t k, std::uint64_t c, double epsilon,
              std::uint64_t seed, const Objective& objective)
      : k_(k),
        c_(c),
        epsilon_(epsilon),
        seed_(seed),
        objective_(objective),
        state_(objective.make_state()),
        result_(k) {
    if (k < 2) throw ConfigError("quickstream requires K >= 2");
    if (c < 1) throw ConfigError("quickstream requires c >= 1");
    if (!(epsilon > 0.0)) throw ConfigError("quickstream requires eps > 0");
    l_ = static_cast<std::uint64_t>(
             std::ceil(std::log2(1.0 / (4.0 * epsilon)))) +
         3;
    const double keep = static_cast<double>(c_) * static_cast<double>(l_) *
                        static_cast<double>(k_ + 1) *
                        std::log2(static_cast<double>(k_));
    trim_keep_ = static_cast<std::uint64_t>(std::floor(keep));
    trim_trigger_ = 2 * trim_keep_;
  }

  std::string algorithm_id() const override { return "quickstream"; }
  std::uint64_t k() const override { return k_; }
  std::optional<double> epsilon() const override { return epsilon_; }
  std::uint64_t seed() const override { return seed_; }

  std::vector<std::pair<std::string, std::string>> extra_config()
      const override {
    return {{"c", std::to_string(c_)}, {"l", std::to_string(l_)}};
  }

  std::uint64_t buffer_scaling() const { return l_; }

  void offer(const DataPoint& e) override {
    ++counters_.items_processed;
    if (current_pass() > 1 && holds(e.ordinal)) return;

    buffer_.push_back(e);
    touch();
    if (buffer_.size() < c_) {
      note_footprint();
      return;
    }

    // one evaluation of f(A u C) against the cached f(A)
    auto extended = state_->clone();
    double block_gain = 0.0;
    for (const DataPoint& item : buffer_) {
      block_gain += extended->commit(item);
    }
    ++counters_.oracle_queries;
    if (block_gain >= state_->value() / static_cast<double>(k_)) {
      state_ = std::move(extended);
      for (DataPoint& item : buffer_) {
        working_.push_back(std::move(item));
      }
      counters_.commits += c_;
    }
    buffer_.clear();

    if (working_.size() >= trim_trigger_) {
      working_.erase(working_.begin(),
                     working_.end() - static_cast<std::ptrdiff_t>(trim_keep_));
      state_ = objective_.make_state();
      for (const DataPoint& item : working_) {
        state_->commit(item);
      }
      ++counters_.oracle_queries;  // re-evaluation of the trimmed set
    }
    note_footprint();
  }

  void finish() override {
    // keep the c*K most recent, split randomly into <= c sets of <= K
    if (working_.size() > c_ * k_) {
      working_.erase(working_.begin(),
                     working_.end() - static_cast<std::ptrdiff_t>(c_ * k_));
    }
    std::vector<std::size_t> order(working_.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::mt19937_64 rng(seed_);
    for (std::size_t i = order.size(); i > 1; --i) {
      const std::uint64_t j = detail::uniform_below(rng, i);
      std::swap(order[i - 1], order[j]);
    }

    result_ = Summary(k_);
    double best_value = -1.0;
    for (std::size_t begin = 0; begin < order.size(); begin += k_) {
      const std::size_t end = std::min(begin + k_, order.size());
      Summary group(k_);
      auto group_state = objective_.make_state();
      for (std::size_t i = begin; i < end; ++i) {
        const DataPoint& item = working_[order[i]];
        group.push(item, group_state->commit(item));
      }
      ++counters_.oracle_queries;
      counters_.note_candidates(2);  // group under evaluation + incumbent
      if (group.fvalue() > best_value) {
        best_value = group.fvalue();
        result_ = std::move(group);
      }
    }
    finished_ = true;
  }

  Summary best_summary() const override { return result_; }

  std::uint64_t selected_count() const override {
    if (finished_) return result_.size();
    return std::min<std::uint64_t>(working_.size(), k_);
  }

 private:
  bool holds(std::uint64_t ordinal) const {
    for (const DataPoint& item : working_) {
      if (item.ordinal == ordinal) return true;
    }
    for (const DataPoint& item : buffer_) {
      if (item.ordinal == ordinal) return true;
    }
    return false;
  }

  void note_footprint() {
    counters_.note_candidates(1);
    counters_.note_elements(working_.size() + buffer_.size());
  }

  std::uint64_t k_;
  std::uint64_t c_;
  double epsilon_;
  std::uint64_t seed_;
  const Objective& objective_;
  std::uint64_t l_ = 0;
  std::uint64_t trim_keep_ = 0;
  std::uint64_t trim_trigger_ = 0;
  std::vector<DataPoint> working_;  // A, in acceptance order
  std::vector<DataPoint> buffer_;   // C
  std::unique_ptr<ObjectiveState> state_;  // f(A)
  Summary result_;
  bool finished_ = false;
};

}  // namespace submax

#endif  // SUBMAX_ALGORITHMS_QUICKSTREAM_HPP
