#ifndef SUBMAX_OBJECTIVES_COVERAGE_HPP
#define SUBMAX_OBJECTIVES_COVERAGE_HPP

#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "submax/errors.hpp"
#include "submax/objective.hpp"

namespace submax {

// Weighted coverage: each feature vector is an indicator over a weighted
// universe (entry > 0 covers that index) and f(S) is the total weight of
// covered indices.  Monotone submodular by construction and float-free for
// integer weights, which makes it the oracle objective for brute-force
// tests.
class CoverageState final : public ObjectiveState {
 public:
  explicit CoverageState(std::vector<double> weights)
      : weights_(std::move(weights)), cover_count_(weights_.size(), 0) {
    if (weights_.empty()) {
      throw ConfigError("coverage universe must be non-empty");
    }
    for (double w : weights_) {
      if (w < 0.0) {
        throw ConfigError("coverage weights must be non-negative");
      }
    }
  }

  std::size_t size() const override { return items_.size(); }
  double value() const override { return fvalue_; }

  double peek_gain(const DataPoint& e) const override {
    check_dim(e);
    double gain = 0.0;
    for (std::size_t j = 0; j < weights_.size(); ++j) {
      if (e.features[j] > 0.0 && cover_count_[j] == 0) {
        gain += weights_[j];
      }
    }
    return gain;
  }

  double commit(const DataPoint& e) override {
    check_dim(e);
    double gain = 0.0;
    for (std::size_t j = 0; j < weights_.size(); ++j) {
      if (e.features[j] > 0.0) {
        if (cover_count_[j] == 0) gain += weights_[j];
        ++cover_count_[j];
      }
    }
    items_.push_back(e.features);
    fvalue_ += gain;
    return gain;
  }

  double swap_gain(std::size_t idx, const DataPoint& e) const override {
    if (idx >= items_.size()) {
      throw ConfigError("swap index out of range");
    }
    check_dim(e);
    double delta = 0.0;
    for (std::size_t j = 0; j < weights_.size(); ++j) {
      const bool before = cover_count_[j] > 0;
      std::uint32_t after_count = cover_count_[j];
      if (items_[idx][j] > 0.0) --after_count;
      if (e.features[j] > 0.0) ++after_count;
      const bool after = after_count > 0;
      if (after != before) {
        delta += after ? weights_[j] : -weights_[j];
      }
    }
    return delta;
  }

  double replace(std::size_t idx, const DataPoint& e) override {
    const double delta = swap_gain(idx, e);
    for (std::size_t j = 0; j < weights_.size(); ++j) {
      if (items_[idx][j] > 0.0) --cover_count_[j];
      if (e.features[j] > 0.0) ++cover_count_[j];
    }
    items_[idx] = e.features;
    fvalue_ += delta;
    return delta;
  }

  double singleton_value(const DataPoint& e) const override {
    check_dim(e);
    double v = 0.0;
    for (std::size_t j = 0; j < weights_.size(); ++j) {
      if (e.features[j] > 0.0) v += weights_[j];
    }
    return v;
  }

  std::unique_ptr<ObjectiveState> clone() const override {
    return std::make_unique<CoverageState>(*this);
  }

 private:
  void check_dim(const DataPoint& e) const {
    if (e.dim() != weights_.size()) {
      throw DimensionError("coverage item dimensionality " +
                           std::to_string(e.dim()) + " != universe size " +
                           std::to_string(weights_.size()));
    }
  }

  std::vector<double> weights_;
  std::vector<std::uint32_t> cover_count_;
  std::vector<std::vector<double>> items_;
  double fvalue_ = 0.0;
};

class CoverageObjective final : public Objective {
 public:
  explicit CoverageObjective(std::vector<double> weights)
      : weights_(std::move(weights)) {}

  std::unique_ptr<ObjectiveState> make_state() const override {
    return std::make_unique<CoverageState>(weights_);
  }

  double singleton_value(const DataPoint& e) const override {
    return CoverageState(weights_).singleton_value(e);
  }

  std::string name() const override { return "coverage"; }

 private:
  std::vector<double> weights_;
};

}  // namespace submax

#endif  // SUBMAX_OBJECTIVES_COVERAGE_HPP
