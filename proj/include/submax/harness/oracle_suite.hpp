#ifndef SUBMAX_HARNESS_ORACLE_SUITE_HPP
#define SUBMAX_HARNESS_ORACLE_SUITE_HPP

#include <cmath>
#include <cstdint>
#include <memory>
#include <ostream>
#include <random>
#include <string>
#include <vector>

#include "submax/algorithms.hpp"
#include "submax/detail/util.hpp"
#include "submax/harness/brute_force.hpp"
#include "submax/harness/synthetic.hpp"
#include "submax/objectives/coverage.hpp"
#include "submax/objectives/log_det.hpp"

namespace submax {

// Seeded small instances for exhaustive-search checks.

inline Dataset random_points(std::size_t n, std::size_t d,
                             std::uint64_t seed) {
  SyntheticSpec spec = make_mixture_spec(SyntheticSpec::Kind::kIid, n, d,
                                         4, 0, 0.15, seed);
  return generate(spec);
}

struct CoverageInstance {
  Dataset data;
  std::vector<double> weights;
};

inline CoverageInstance random_coverage_instance(std::size_t n,
                                                 std::size_t universe,
                                                 std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  CoverageInstance instance;
  instance.weights.resize(universe);
  for (double& w : instance.weights) {
    w = static_cast<double>(1 + detail::uniform_below(rng, 9));
  }
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<double> indicator(universe, 0.0);
    bool any = false;
    for (std::size_t j = 0; j < universe; ++j) {
      if (detail::uniform_below(rng, 10) < 3) {
        indicator[j] = 1.0;
        any = true;
      }
    }
    if (!any) {
      indicator[detail::uniform_below(rng, universe)] = 1.0;
    }
    instance.data.emplace_back(i, std::move(indicator));
  }
  return instance;
}

// Approximation contracts on the small-instance suite, checked against
// exhaustive search: the survey table's ratios as testable outcomes.
struct OracleSuiteResult {
  std::uint64_t checks = 0;
  std::uint64_t failures = 0;
  bool ok() const { return failures == 0; }
};

inline OracleSuiteResult run_oracle_suite(std::uint64_t seed,
                                          std::uint64_t instances,
                                          std::ostream& out) {
  constexpr std::size_t kN = 12;
  constexpr std::uint64_t kK = 3;
  constexpr double kEps = 0.01;
  const double inv_e = 1.0 / std::exp(1.0);

  struct Contract {
    std::string name;
    double ratio;
    std::uint64_t violations = 0;
    double worst = 1e300;
  };
  std::vector<Contract> contracts = {
      {"greedy >= (1-1/e) OPT", 1.0 - inv_e},
      {"sieve-streaming >= (1/2-eps) OPT", 0.5 - kEps},
      {"sieve-streaming-pp >= (1/2-eps) OPT", 0.5 - kEps},
      {"salsa >= (1/2-eps) OPT", 0.5 - kEps},
      {"quickstream(c=1) >= (1/4-eps) OPT", 0.25 - kEps},
      {"isi >= 1/4 OPT", 0.25},
      {"preemption >= 1/4 OPT", 0.25},
      {"no algorithm beats OPT", 0.0},
  };

  OracleSuiteResult result;
  for (std::uint64_t rep = 0; rep < instances; ++rep) {
    for (int objective_kind = 0; objective_kind < 2; ++objective_kind) {
      const std::uint64_t instance_seed = seed * 7919 + rep * 2 + 1 +
                                          static_cast<std::uint64_t>(
                                              objective_kind);
      std::unique_ptr<Objective> objective;
      Dataset data;
      if (objective_kind == 0) {
        data = random_points(kN, 3, instance_seed);
        objective = std::make_unique<LogDetObjective>(
            1.0, RbfKernel(default_batch_length_scale(3)));
      } else {
        CoverageInstance instance =
            random_coverage_instance(kN, 8, instance_seed);
        data = std::move(instance.data);
        objective = std::make_unique<CoverageObjective>(instance.weights);
      }

      const BruteForceResult brute = brute_force_opt(data, kK, *objective);
      double m = 0.0;
      for (const DataPoint& e : data) {
        m = std::max(m, objective->singleton_value(e));
      }
      const MPolicy known = MPolicy::known(m);

      const RuleOfThreeConfig patience = RuleOfThreeConfig::direct(5);
      std::vector<double> values = {
          run_greedy(data, kK, *objective).fvalue,
          run_sieve_streaming(data, kK, kEps, known, *objective).fvalue,
          run_sieve_streaming_pp(data, kK, kEps, known, *objective).fvalue,
          run_salsa(data, kK, kEps, m, data.size(), *objective).fvalue,
          run_quickstream(data, kK, 1, kEps, instance_seed, *objective).fvalue,
          run_isi(data, kK, *objective).fvalue,
          run_preemption(data, kK, 1.0, *objective).fvalue,
      };
      (void)patience;

      for (std::size_t i = 0; i < values.size(); ++i) {
        ++result.checks;
        const double ratio = values[i] / brute.opt;
        Contract& contract = contracts[i];
        contract.worst = std::min(contract.worst, ratio);
        if (ratio < contract.ratio - 1e-9) {
          ++contract.violations;
          ++result.failures;
        }
      }
      ++result.checks;
      Contract& upper = contracts.back();
      double max_value = 0.0;
      for (double v : values) max_value = std::max(max_value, v);
      upper.worst = std::min(upper.worst, brute.opt - max_value);
      if (max_value > brute.opt + 1e-9) {
        ++upper.violations;
        ++result.failures;
      }
    }
  }

  for (const Contract& contract : contracts) {
    out << (contract.violations == 0 ? "PASS" : "FAIL") << "  "
        << contract.name << "  (worst margin " << contract.worst << ")\n";
  }
  return result;
}

}  // namespace submax

#endif  // SUBMAX_HARNESS_ORACLE_SUITE_HPP
