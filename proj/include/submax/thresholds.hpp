#ifndef SUBMAX_THRESHOLDS_HPP
#define SUBMAX_THRESHOLDS_HPP

#include <cmath>
#include <cstdint>
#include <optional>
#include <vector>

#include "submax/errors.hpp"

namespace submax {

// The geometric threshold set O = {(1+eps)^i : m <= (1+eps)^i <= K*m},
// represented by its integer exponent range.  Thresholds are recomputed as
// powers on demand, never accumulated multiplicatively, so long grids do not
// drift; iteration is lazy and needs no materialized set.
//
// A rounding-empty range (possible for K = 1) falls back to the single
// threshold m: the acceptance rule with v = m still admits the best
// singleton.
class ThresholdGrid {
 public:
  ThresholdGrid(double m, std::uint64_t k, double epsilon)
      : m_(m), k_(k), epsilon_(epsilon) {
    if (!(m > 0.0)) throw ConfigError("threshold grid requires m > 0");
    if (k < 1) throw ConfigError("threshold grid requires K >= 1");
    if (!(epsilon > 0.0)) throw ConfigError("threshold grid requires eps > 0");

    const double log_base = std::log1p(epsilon);
    const double upper = static_cast<double>(k) * m;

    // log-derived guesses with a +-1 integer scan to absorb fenceposts at
    // exact powers
    std::int64_t lo = static_cast<std::int64_t>(
        std::ceil(std::log(m) / log_base));
    while (power(lo - 1) >= m) --lo;
    while (power(lo) < m) ++lo;

    std::int64_t hi = static_cast<std::int64_t>(
        std::floor(std::log(upper) / log_base));
    while (power(hi + 1) <= upper) ++hi;
    while (power(hi) > upper) --hi;

    degenerate_ = lo > hi;
    i_lo_ = lo;
    i_hi_ = hi;
  }

  double m() const { return m_; }
  std::uint64_t k() const { return k_; }
  double epsilon() const { return epsilon_; }
  bool degenerate() const { return degenerate_; }

  std::uint64_t size() const {
    if (degenerate_) return 1;
    return static_cast<std::uint64_t>(i_hi_ - i_lo_ + 1);
  }

  std::int64_t exponent_lo() const { return i_lo_; }
  std::int64_t exponent_hi() const { return i_hi_; }

  double threshold_at(std::int64_t exponent) const {
    if (degenerate_) return m_;
    return power(exponent);
  }

  double max_threshold() const { return threshold_at(i_hi_); }
  double min_threshold() const { return threshold_at(i_lo_); }

  // Materializes the grid ascending; test and report helper, not used by the
  // streaming loops.
  std::vector<double> ascending() const {
    std::vector<double> out;
    if (degenerate_) {
      out.push_back(m_);
      return out;
    }
    out.reserve(size());
    for (std::int64_t i = i_lo_; i <= i_hi_; ++i) {
      out.push_back(power(i));
    }
    return out;
  }

  // Lazy max-first iteration: each call yields the next smaller threshold.
  class DescendingCursor {
   public:
    explicit DescendingCursor(const ThresholdGrid& grid)
        : grid_(&grid),
          next_(grid.degenerate() ? 0 : grid.exponent_hi()),
          pending_(true) {}

    std::optional<double> next() {
      if (grid_->degenerate()) {
        if (!pending_) return std::nullopt;
        pending_ = false;
        return grid_->m();
      }
      if (next_ < grid_->exponent_lo()) return std::nullopt;
      return grid_->threshold_at(next_--);
    }

   private:
    const ThresholdGrid* grid_;
    std::int64_t next_;
    bool pending_;
  };

  DescendingCursor descending() const { return DescendingCursor(*this); }

 private:
  double power(std::int64_t i) const {
    return std::pow(1.0 + epsilon_, static_cast<double>(i));
  }

  double m_;
  std::uint64_t k_;
  double epsilon_;
  std::int64_t i_lo_ = 0;
  std::int64_t i_hi_ = -1;
  bool degenerate_ = false;
};

inline ThresholdGrid grid_make(double m, std::uint64_t k, double epsilon) {
  return ThresholdGrid(m, k, epsilon);
}

// Smallest T with -ln(alpha)/T <= tau, i.e. the number of consecutive
// rejections after which p(e | f, S, v) lies in [0, tau] at confidence
// 1 - alpha.
inline std::uint64_t rule_of_three_T(double alpha, double tau) {
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw ConfigError("rule of three requires alpha in (0,1)");
  }
  if (!(tau > 0.0 && tau < 1.0)) {
    throw ConfigError("rule of three requires tau in (0,1)");
  }
  const double neg_log_alpha = -std::log(alpha);
  const auto satisfies = [&](std::uint64_t t) {
    // relative slack absorbs rounding at exact integer boundaries
    return neg_log_alpha / static_cast<double>(t) <= tau * (1.0 + 1e-12);
  };
  auto t = static_cast<std::uint64_t>(
      std::max(1.0, std::floor(neg_log_alpha / tau)));
  while (!satisfies(t)) ++t;
  while (t > 1 && satisfies(t - 1)) --t;
  return t;
}

// Either T directly or the (alpha, tau) pair it is derived from; reports
// carry whichever parametrization was supplied.
struct RuleOfThreeConfig {
  std::optional<std::uint64_t> t;
  std::optional<double> alpha;
  std::optional<double> tau;

  static RuleOfThreeConfig direct(std::uint64_t t_value) {
    if (t_value < 1) throw ConfigError("T must be >= 1");
    RuleOfThreeConfig cfg;
    cfg.t = t_value;
    return cfg;
  }

  static RuleOfThreeConfig from_confidence(double alpha, double tau) {
    RuleOfThreeConfig cfg;
    cfg.alpha = alpha;
    cfg.tau = tau;
    cfg.t = rule_of_three_T(alpha, tau);
    return cfg;
  }

  std::uint64_t resolve() const {
    if (!t.has_value()) throw ConfigError("rule-of-three config unresolved");
    return *t;
  }
};

struct MEstimate {
  double m = 0.0;
  bool reset_required = false;
};

// On-the-fly maximum-singleton tracking.  A strictly larger singleton
// invalidates every acceptance decision made so far: the caller deletes its
// summary (ThreeSieves) or regenerates the grid (sieve families) and
// restarts from the new upper bound K * m.
inline MEstimate m_estimator_update(double current_m, double singleton_value) {
  if (singleton_value > current_m) {
    return MEstimate{singleton_value, true};
  }
  return MEstimate{current_m, false};
}

}  // namespace submax

#endif  // SUBMAX_THRESHOLDS_HPP
