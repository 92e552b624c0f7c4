#ifndef SUBMAX_SUMMARY_HPP
#define SUBMAX_SUMMARY_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "submax/data_point.hpp"
#include "submax/errors.hpp"

namespace submax {

// A candidate solution: up to K items in insertion order plus the cached
// objective value f(S).  The value is carried redundantly so reads stay O(1)
// and never show up in the oracle-query accounting.
class Summary {
 public:
  Summary() = default;

  explicit Summary(std::size_t capacity) : capacity_(capacity) {
    if (capacity == 0) {
      throw ConfigError("summary capacity K must be positive");
    }
  }

  std::size_t capacity() const { return capacity_; }
  std::size_t size() const { return items_.size(); }
  bool full() const { return items_.size() >= capacity_; }
  bool empty() const { return items_.empty(); }
  double fvalue() const { return fvalue_; }
  const std::vector<DataPoint>& items() const { return items_; }

  bool contains(std::uint64_t ordinal) const {
    for (const DataPoint& e : items_) {
      if (e.ordinal == ordinal) return true;
    }
    return false;
  }

  // Appends e and adds its marginal gain to the cached value.
  void push(const DataPoint& e, double gain) {
    if (full()) {
      throw CapacityError("summary already holds K = " +
                          std::to_string(capacity_) + " items");
    }
    if (contains(e.ordinal)) {
      throw DuplicateOrdinalError("ordinal " + std::to_string(e.ordinal) +
                                  " already in summary");
    }
    items_.push_back(e);
    fvalue_ += gain;
  }

  // Replaces the item at idx and shifts the cached value by value_delta.
  void replace(std::size_t idx, const DataPoint& e, double value_delta) {
    if (idx >= items_.size()) {
      throw ConfigError("replace index out of range");
    }
    for (std::size_t i = 0; i < items_.size(); ++i) {
      if (i != idx && items_[i].ordinal == e.ordinal) {
        throw DuplicateOrdinalError("ordinal " + std::to_string(e.ordinal) +
                                    " already in summary");
      }
    }
    items_[idx] = e;
    fvalue_ += value_delta;
  }

  void clear() {
    items_.clear();
    fvalue_ = 0.0;
  }

 private:
  std::vector<DataPoint> items_;
  std::size_t capacity_ = 1;
  double fvalue_ = 0.0;
};

// relative performance of an algorithm against the Greedy reference on the
// same instance; may exceed 1.
inline double relative_performance(double f_alg, double f_greedy) {
  if (!(f_greedy > 0.0)) {
    throw ConfigError("relative_performance requires f_greedy > 0");
  }
  return f_alg / f_greedy;
}

}  // namespace submax

#endif  // SUBMAX_SUMMARY_HPP
