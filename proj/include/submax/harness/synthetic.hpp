#ifndef SUBMAX_HARNESS_SYNTHETIC_HPP
#define SUBMAX_HARNESS_SYNTHETIC_HPP

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <vector>

#include "submax/data_point.hpp"
#include "submax/detail/util.hpp"
#include "submax/errors.hpp"

namespace submax {

struct MixtureComponent {
  std::vector<double> mean;
  double scale = 1.0;
};

// Seeded Gaussian-mixture stream.  The iid kind draws every item from the
// full mixture (uniform component weights); the drift kind emulates a
// class-sequenced stream: the components are split into one block per
// segment and each change point activates the next block, so fresh classes
// keep arriving while old ones stop.  With as many segments as components
// each segment plays exactly one class.
struct SyntheticSpec {
  enum class Kind { kIid, kDrift };

  Kind kind = Kind::kIid;
  std::uint64_t n = 0;
  std::size_t d = 0;
  std::vector<MixtureComponent> components;
  std::vector<std::uint64_t> change_points;  // strictly increasing, < n
  std::uint64_t seed = 0;

  void validate() const {
    if (n == 0) throw ConfigError("synthetic stream needs n >= 1");
    if (d == 0) throw ConfigError("synthetic stream needs d >= 1");
    if (components.empty()) {
      throw ConfigError("synthetic stream needs >= 1 mixture component");
    }
    for (const MixtureComponent& c : components) {
      if (c.mean.size() != d) {
        throw ConfigError("component mean dimensionality mismatch");
      }
      if (!(c.scale >= 0.0)) throw ConfigError("component scale must be >= 0");
    }
    if (kind == Kind::kIid && !change_points.empty()) {
      throw ConfigError("iid stream must not have change points");
    }
    for (std::size_t i = 0; i < change_points.size(); ++i) {
      if (change_points[i] >= n) {
        throw ConfigError("change point beyond stream length");
      }
      if (i > 0 && change_points[i] <= change_points[i - 1]) {
        throw ConfigError("change points must be strictly increasing");
      }
    }
  }
};

namespace detail {

// Box-Muller on raw 53-bit uniforms; keeps streams reproducible without
// relying on distribution internals.
inline double standard_normal(std::mt19937_64& rng) {
  const double u1 =
      1.0 - static_cast<double>(rng() >> 11) * 0x1.0p-53;  // (0, 1]
  const double u2 = static_cast<double>(rng() >> 11) * 0x1.0p-53;  // [0, 1)
  return std::sqrt(-2.0 * std::log(u1)) *
         std::cos(2.0 * std::numbers::pi * u2);
}

}  // namespace detail

inline Dataset generate(const SyntheticSpec& spec) {
  spec.validate();
  std::mt19937_64 rng(spec.seed);
  Dataset data;
  data.reserve(spec.n);
  const std::size_t segments = spec.change_points.size() + 1;
  const std::size_t block =
      std::max<std::size_t>(1, spec.components.size() / segments);
  std::size_t segment = 0;
  for (std::uint64_t i = 0; i < spec.n; ++i) {
    while (segment < spec.change_points.size() &&
           i >= spec.change_points[segment]) {
      ++segment;
    }
    std::size_t component;
    if (spec.kind == SyntheticSpec::Kind::kIid) {
      component = detail::uniform_below(rng, spec.components.size());
    } else {
      component = (segment * block + detail::uniform_below(rng, block)) %
                  spec.components.size();
    }
    const MixtureComponent& mix = spec.components[component];
    std::vector<double> features(spec.d);
    for (std::size_t j = 0; j < spec.d; ++j) {
      features[j] = mix.mean[j] + mix.scale * detail::standard_normal(rng);
    }
    data.emplace_back(i, std::move(features));
  }
  return data;
}

// Mixture with seeded means in [0, mean_spread]^d; the desk-scale stand-in
// used by the CLI and the experiment defaults.  mean_spread controls how
// correlated the classes are under the RBF kernel.
inline SyntheticSpec make_mixture_spec(SyntheticSpec::Kind kind,
                                       std::uint64_t n, std::size_t d,
                                       std::size_t n_components,
                                       std::size_t n_change_points,
                                       double component_scale,
                                       std::uint64_t seed,
                                       double mean_spread = 1.0) {
  SyntheticSpec spec;
  spec.kind = kind;
  spec.n = n;
  spec.d = d;
  spec.seed = seed;
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
  for (std::size_t c = 0; c < n_components; ++c) {
    MixtureComponent mix;
    mix.scale = component_scale;
    mix.mean.resize(d);
    for (std::size_t j = 0; j < d; ++j) {
      mix.mean[j] =
          mean_spread * (static_cast<double>(rng() >> 11) * 0x1.0p-53);
    }
    spec.components.push_back(std::move(mix));
  }
  if (kind == SyntheticSpec::Kind::kDrift) {
    for (std::size_t p = 1; p <= n_change_points; ++p) {
      spec.change_points.push_back(p * n / (n_change_points + 1));
    }
  }
  return spec;
}

}  // namespace submax

#endif  // SUBMAX_HARNESS_SYNTHETIC_HPP
