#ifndef SUBMAX_ALGORITHMS_HPP
#define SUBMAX_ALGORITHMS_HPP

#include <optional>
#include <span>

#include "submax/algorithms/common.hpp"
#include "submax/algorithms/greedy.hpp"
#include "submax/algorithms/independent_set_improvement.hpp"
#include "submax/algorithms/m_policy.hpp"
#include "submax/algorithms/preemption.hpp"
#include "submax/algorithms/quickstream.hpp"
#include "submax/algorithms/random.hpp"
#include "submax/algorithms/salsa.hpp"
#include "submax/algorithms/sieve_streaming.hpp"
#include "submax/algorithms/sieve_streaming_pp.hpp"
#include "submax/algorithms/stream_greedy.hpp"
#include "submax/algorithms/three_sieves.hpp"

namespace submax {

// Single-pass convenience wrappers around the per-item classes.

inline RunReport run_random(std::span<const DataPoint> stream, std::uint64_t k,
                            std::uint64_t seed, const Objective& objective) {
  RandomSelection algo(k, seed, objective);
  return run_stream(algo, stream);
}

inline RunReport run_isi(std::span<const DataPoint> stream, std::uint64_t k,
                         const Objective& objective) {
  IndependentSetImprovement algo(k, objective);
  return run_stream(algo, stream);
}

inline RunReport run_preemption(std::span<const DataPoint> stream,
                                std::uint64_t k, double c,
                                const Objective& objective) {
  PreemptionStreaming algo(k, c, objective);
  return run_stream(algo, stream);
}

inline RunReport run_sieve_streaming(std::span<const DataPoint> stream,
                                     std::uint64_t k, double epsilon,
                                     MPolicy m_policy,
                                     const Objective& objective) {
  SieveStreaming algo(k, epsilon, m_policy, objective);
  return run_stream(algo, stream);
}

inline RunReport run_sieve_streaming_pp(std::span<const DataPoint> stream,
                                        std::uint64_t k, double epsilon,
                                        MPolicy m_policy,
                                        const Objective& objective) {
  SieveStreamingPP algo(k, epsilon, m_policy, objective);
  return run_stream(algo, stream);
}

inline RunReport run_salsa(std::span<const DataPoint> stream, std::uint64_t k,
                           double epsilon, double m,
                           std::optional<std::uint64_t> length_hint,
                           const Objective& objective,
                           SalsaRules rules = SalsaRules::all()) {
  Salsa algo(k, epsilon, m, rules, length_hint, objective);
  return run_stream(algo, stream);
}

inline RunReport run_quickstream(std::span<const DataPoint> stream,
                                 std::uint64_t k, std::uint64_t c,
                                 double epsilon, std::uint64_t seed,
                                 const Objective& objective) {
  QuickStream algo(k, c, epsilon, seed, objective);
  return run_stream(algo, stream);
}

inline RunReport run_three_sieves(std::span<const DataPoint> stream,
                                  std::uint64_t k, double epsilon,
                                  RuleOfThreeConfig patience, MPolicy m_policy,
                                  const Objective& objective) {
  ThreeSieves algo(k, epsilon, patience, m_policy, objective);
  return run_stream(algo, stream);
}

}  // namespace submax

#endif  // SUBMAX_ALGORITHMS_HPP
