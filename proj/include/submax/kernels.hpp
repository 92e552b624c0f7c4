#ifndef SUBMAX_KERNELS_HPP
#define SUBMAX_KERNELS_HPP

#include <cmath>
#include <span>
#include <string>

#include "submax/errors.hpp"

namespace submax {

// Radial basis function kernel k(x, y) = exp(-||x - y||^2 / (2 l^2)).
// Normalized: k(x, x) = 1, 0 < k(x, y) <= 1, symmetric.
class RbfKernel {
 public:
  explicit RbfKernel(double length_scale) : length_scale_(length_scale) {
    if (!(length_scale > 0.0)) {
      throw ConfigError("RBF length scale must be positive");
    }
    inv_two_l2_ = 1.0 / (2.0 * length_scale * length_scale);
  }

  double length_scale() const { return length_scale_; }

  double operator()(std::span<const double> x, std::span<const double> y) const {
    if (x.size() != y.size()) {
      throw DimensionError("kernel arguments have dimensions " +
                           std::to_string(x.size()) + " and " +
                           std::to_string(y.size()));
    }
    double sq = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
      const double diff = x[i] - y[i];
      sq += diff * diff;
    }
    return std::exp(-sq * inv_two_l2_);
  }

 private:
  double length_scale_;
  double inv_two_l2_;
};

inline double rbf_eval(std::span<const double> x, std::span<const double> y,
                       double length_scale) {
  return RbfKernel(length_scale)(x, y);
}

// Paper defaults: l = 1/(2 sqrt(d)) for batch runs, l = 1/sqrt(d) for
// single-pass stream runs.
inline double default_batch_length_scale(std::size_t d) {
  return 1.0 / (2.0 * std::sqrt(static_cast<double>(d)));
}

inline double default_stream_length_scale(std::size_t d) {
  return 1.0 / std::sqrt(static_cast<double>(d));
}

}  // namespace submax

#endif  // SUBMAX_KERNELS_HPP
