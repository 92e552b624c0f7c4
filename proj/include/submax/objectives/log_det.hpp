#ifndef SUBMAX_OBJECTIVES_LOG_DET_HPP
#define SUBMAX_OBJECTIVES_LOG_DET_HPP

#include <cmath>
#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "submax/errors.hpp"
#include "submax/kernels.hpp"
#include "submax/objective.hpp"

namespace submax {

// f(S) = 1/2 log det(I + a * Sigma_S) with Sigma_S = [k(e_i, e_j)]_ij.
//
// The state keeps the lower-triangular Cholesky factor L of I + a Sigma_S
// and extends it by one row per commit (O(|S|^2)); f(S) = sum_i log L_ii.
// Swaps refactorize from scratch: rank-one downdates are numerically fragile
// and only the swap-based algorithms need them.
class LogDetState final : public ObjectiveState {
 public:
  // Schur complements d_e - c'c are >= 1 in exact arithmetic; the floor only
  // guards log/sqrt against catastrophic rounding on near-singular kernels.
  static constexpr double kSchurFloor = 1e-12;

  LogDetState(double scale, RbfKernel kernel)
      : scale_(scale), kernel_(std::move(kernel)) {
    if (!(scale > 0.0)) {
      throw ConfigError("log-det scale a must be positive");
    }
  }

  std::size_t size() const override { return rows_.size(); }
  double value() const override { return fvalue_; }

  double peek_gain(const DataPoint& e) const override {
    double schur = 0.0;
    extension_column(e, nullptr, &schur);
    return gain_from_schur(schur);
  }

  double commit(const DataPoint& e) override {
    std::vector<double> column;
    double schur = 0.0;
    extension_column(e, &column, &schur);
    const double clamped = std::max(schur, kSchurFloor);
    column.push_back(std::sqrt(clamped));
    tri_.insert(tri_.end(), column.begin(), column.end());
    rows_.push_back(e.features);
    const double gain = gain_from_schur(schur);
    fvalue_ += gain;
    return gain;
  }

  double swap_gain(std::size_t idx, const DataPoint& e) const override {
    if (idx >= rows_.size()) {
      throw ConfigError("swap index out of range");
    }
    return refactorized_value(idx, e) - fvalue_;
  }

  double replace(std::size_t idx, const DataPoint& e) override {
    if (idx >= rows_.size()) {
      throw ConfigError("replace index out of range");
    }
    LogDetState rebuilt(scale_, kernel_);
    rebuilt.rows_.reserve(rows_.size());
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      DataPoint item;
      item.features = (i == idx) ? e.features : rows_[i];
      rebuilt.commit(item);
    }
    const double delta = rebuilt.fvalue_ - fvalue_;
    rows_ = std::move(rebuilt.rows_);
    tri_ = std::move(rebuilt.tri_);
    fvalue_ = rebuilt.fvalue_;
    return delta;
  }

  double singleton_value(const DataPoint& e) const override {
    return 0.5 * std::log1p(scale_ * kernel_(e.features, e.features));
  }

  std::unique_ptr<ObjectiveState> clone() const override {
    return std::make_unique<LogDetState>(*this);
  }

 private:
  static double gain_from_schur(double schur) {
    const double g = 0.5 * std::log(std::max(schur, kSchurFloor));
    return g > 0.0 ? g : 0.0;
  }

  // Extension row c of the factor for a new item: L c = b with
  // b_i = a k(e_i, e), and the Schur complement d_e - c'c.
  void extension_column(const DataPoint& e, std::vector<double>* column,
                        double* schur) const {
    const std::size_t s = rows_.size();
    std::vector<double> c(s);
    double csq = 0.0;
    for (std::size_t i = 0; i < s; ++i) {
      double acc = scale_ * kernel_(rows_[i], e.features);
      const double* lrow = tri_row(i);
      for (std::size_t j = 0; j < i; ++j) {
        acc -= lrow[j] * c[j];
      }
      c[i] = acc / lrow[i];
      csq += c[i] * c[i];
    }
    const double de = 1.0 + scale_ * kernel_(e.features, e.features);
    *schur = de - csq;
    if (column != nullptr) {
      *column = std::move(c);
    }
  }

  double refactorized_value(std::size_t skip_idx, const DataPoint& e) const {
    LogDetState scratch(scale_, kernel_);
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      DataPoint item;
      item.features = (i == skip_idx) ? e.features : rows_[i];
      scratch.commit(item);
    }
    return scratch.fvalue_;
  }

  const double* tri_row(std::size_t i) const {
    return tri_.data() + i * (i + 1) / 2;
  }

  double scale_;
  RbfKernel kernel_;
  std::vector<std::vector<double>> rows_;
  std::vector<double> tri_;  // packed lower triangle, row-major
  double fvalue_ = 0.0;
};

class LogDetObjective final : public Objective {
 public:
  LogDetObjective(double scale, RbfKernel kernel)
      : scale_(scale), kernel_(std::move(kernel)) {
    if (!(scale > 0.0)) {
      throw ConfigError("log-det scale a must be positive");
    }
  }

  std::unique_ptr<ObjectiveState> make_state() const override {
    return std::make_unique<LogDetState>(scale_, kernel_);
  }

  double singleton_value(const DataPoint& e) const override {
    return 0.5 * std::log1p(scale_ * kernel_(e.features, e.features));
  }

  std::string name() const override { return "log-det"; }

  double scale() const { return scale_; }
  const RbfKernel& kernel() const { return kernel_; }

 private:
  double scale_;
  RbfKernel kernel_;
};

// Maximum singleton value of the log-det objective under a normalized kernel
// (k(e, e) = 1): m = 1/2 log(1 + a).  K times this bounds OPT from above.
inline double logdet_singleton_bound(double scale) {
  if (!(scale > 0.0)) {
    throw ConfigError("log-det scale a must be positive");
  }
  return 0.5 * std::log1p(scale);
}

}  // namespace submax

#endif  // SUBMAX_OBJECTIVES_LOG_DET_HPP
