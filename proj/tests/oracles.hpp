// Test-side oracles, kept independent of the library's evaluation paths:
// the dense log-det goes through pivoted LU elimination on the full kernel
// matrix, not through any incremental factor.
#ifndef SUBMAX_TESTS_ORACLES_HPP
#define SUBMAX_TESTS_ORACLES_HPP

#include <cmath>
#include <cstdlib>
#include <vector>

#include "submax/data_point.hpp"
#include "submax/kernels.hpp"

namespace submax_tests {

// 1/2 log det(I + a Sigma_S) by Gaussian elimination with partial pivoting.
inline double dense_logdet(const std::vector<submax::DataPoint>& items,
                           double a, const submax::RbfKernel& kernel) {
  const std::size_t n = items.size();
  if (n == 0) return 0.0;
  std::vector<std::vector<double>> mat(n, std::vector<double>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      mat[i][j] = a * kernel(items[i].features, items[j].features) +
                  (i == j ? 1.0 : 0.0);
    }
  }
  double log_det = 0.0;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    for (std::size_t row = col + 1; row < n; ++row) {
      if (std::abs(mat[row][col]) > std::abs(mat[pivot][col])) pivot = row;
    }
    if (pivot != col) std::swap(mat[pivot], mat[col]);
    log_det += std::log(std::abs(mat[col][col]));
    for (std::size_t row = col + 1; row < n; ++row) {
      const double factor = mat[row][col] / mat[col][col];
      for (std::size_t j = col; j < n; ++j) {
        mat[row][j] -= factor * mat[col][j];
      }
    }
  }
  return 0.5 * log_det;
}

// Direct weighted-coverage evaluation over indicator vectors.
inline double direct_coverage(const std::vector<submax::DataPoint>& items,
                              const std::vector<double>& weights) {
  std::vector<bool> covered(weights.size(), false);
  for (const submax::DataPoint& e : items) {
    for (std::size_t j = 0; j < weights.size(); ++j) {
      if (e.features[j] > 0.0) covered[j] = true;
    }
  }
  double total = 0.0;
  for (std::size_t j = 0; j < weights.size(); ++j) {
    if (covered[j]) total += weights[j];
  }
  return total;
}

}  // namespace submax_tests

#endif  // SUBMAX_TESTS_ORACLES_HPP
