#ifndef SUBMAX_HARNESS_BRUTE_FORCE_HPP
#define SUBMAX_HARNESS_BRUTE_FORCE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "submax/data_point.hpp"
#include "submax/errors.hpp"
#include "submax/objective.hpp"

namespace submax {

struct BruteForceResult {
  double opt = 0.0;
  std::vector<std::uint64_t> ordinals;  // lexicographically first maximizer
};

namespace detail {

inline double choose_count(std::size_t n, std::size_t k) {
  double c = 1.0;
  for (std::size_t i = 1; i <= k; ++i) {
    c *= static_cast<double>(n - k + i) / static_cast<double>(i);
    if (c > 1e18) return c;
  }
  return c;
}

}  // namespace detail

// Exhaustive maximum of f over all size-K subsets (f(V) when K >= n, by
// monotonicity).  Guarded at 10^6 subsets; ties break lexicographically on
// ordinals via strict improvement over ascending-index enumeration.
inline BruteForceResult brute_force_opt(const Dataset& data, std::uint64_t k,
                                        const Objective& objective) {
  const std::size_t n = data.size();
  BruteForceResult result;
  if (n == 0 || k == 0) return result;

  if (k >= n) {
    auto state = objective.make_state();
    for (const DataPoint& e : data) {
      state->commit(e);
      result.ordinals.push_back(e.ordinal);
    }
    result.opt = state->value();
    return result;
  }

  const double subsets = detail::choose_count(n, static_cast<std::size_t>(k));
  if (subsets > 1e6) {
    throw InstanceTooLargeError(
        "brute force over " + std::to_string(subsets) +
        " subsets exceeds the 1e6 guard");
  }

  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;

  bool first = true;
  while (true) {
    auto state = objective.make_state();
    for (std::size_t i : idx) {
      state->commit(data[i]);
    }
    const double value = state->value();
    if (first || value > result.opt) {
      first = false;
      result.opt = value;
      result.ordinals.clear();
      for (std::size_t i : idx) result.ordinals.push_back(data[i].ordinal);
    }

    // next combination in lexicographic order
    std::size_t pos = k;
    while (pos > 0 && idx[pos - 1] == n - k + pos - 1) --pos;
    if (pos == 0) break;
    --pos;
    ++idx[pos];
    for (std::size_t i = pos + 1; i < k; ++i) idx[i] = idx[i - 1] + 1;
  }
  return result;
}

}  // namespace submax

#endif  // SUBMAX_HARNESS_BRUTE_FORCE_HPP
