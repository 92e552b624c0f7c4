#ifndef SUBMAX_ALGORITHMS_M_POLICY_HPP
#define SUBMAX_ALGORITHMS_M_POLICY_HPP

#include <string>

#include "submax/errors.hpp"

namespace submax {

// Whether the maximum singleton value m is supplied up front or tracked on
// the fly from observed singletons.
struct MPolicy {
  enum class Kind { kKnown, kEstimate };

  Kind kind = Kind::kEstimate;
  double m = 0.0;

  static MPolicy known(double m) {
    if (!(m > 0.0)) throw ConfigError("known m must be positive");
    return MPolicy{Kind::kKnown, m};
  }

  static MPolicy estimate() { return MPolicy{Kind::kEstimate, 0.0}; }

  bool is_known() const { return kind == Kind::kKnown; }

  std::string label() const {
    return is_known() ? "known" : "estimate";
  }
};

}  // namespace submax

#endif  // SUBMAX_ALGORITHMS_M_POLICY_HPP
