#ifndef SUBMAX_DATA_POINT_HPP
#define SUBMAX_DATA_POINT_HPP

#include <cmath>
#include <cstdint>
#include <utility>
#include <vector>

#include "submax/errors.hpp"

namespace submax {

// One stream item: an arrival index plus a dense feature vector.
// Identity is the ordinal, never feature equality; real streams contain
// exact duplicate rows.
struct DataPoint {
  std::uint64_t ordinal = 0;
  std::vector<double> features;

  DataPoint() = default;

  DataPoint(std::uint64_t ordinal_, std::vector<double> features_)
      : ordinal(ordinal_), features(std::move(features_)) {
    if (features.empty()) {
      throw ConfigError("DataPoint requires dimensionality d >= 1");
    }
    for (double x : features) {
      if (!std::isfinite(x)) {
        throw ConfigError("DataPoint features must be finite");
      }
    }
  }

  std::size_t dim() const { return features.size(); }
};

using Dataset = std::vector<DataPoint>;

}  // namespace submax

#endif  // SUBMAX_DATA_POINT_HPP
