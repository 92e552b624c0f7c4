#ifndef SUBMAX_HARNESS_EXPERIMENT_HPP
#define SUBMAX_HARNESS_EXPERIMENT_HPP

#include <atomic>
#include <memory>
#include <optional>
#include <string>
#include <thread>
#include <vector>

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
#include "submax/errors.hpp"
#include "submax/harness/csv.hpp"
#include "submax/harness/synthetic.hpp"
#include "submax/kernels.hpp"
#include "submax/objectives/coverage.hpp"
#include "submax/objectives/log_det.hpp"
#include "submax/report.hpp"
#include "submax/thresholds.hpp"

namespace submax {

enum class AlgorithmId {
  kGreedy,
  kRandom,
  kIsi,
  kStreamGreedy,
  kPreemption,
  kSieveStreaming,
  kSieveStreamingPP,
  kSalsa,
  kQuickStream,
  kThreeSieves,
};

inline std::string algorithm_name(AlgorithmId id) {
  switch (id) {
    case AlgorithmId::kGreedy: return "greedy";
    case AlgorithmId::kRandom: return "random";
    case AlgorithmId::kIsi: return "isi";
    case AlgorithmId::kStreamGreedy: return "stream-greedy";
    case AlgorithmId::kPreemption: return "preemption";
    case AlgorithmId::kSieveStreaming: return "sieve-streaming";
    case AlgorithmId::kSieveStreamingPP: return "sieve-streaming-pp";
    case AlgorithmId::kSalsa: return "salsa";
    case AlgorithmId::kQuickStream: return "quickstream";
    case AlgorithmId::kThreeSieves: return "three-sieves";
  }
  throw ConfigError("unknown algorithm id");
}

inline AlgorithmId algorithm_from_name(const std::string& name) {
  for (AlgorithmId id :
       {AlgorithmId::kGreedy, AlgorithmId::kRandom, AlgorithmId::kIsi,
        AlgorithmId::kStreamGreedy, AlgorithmId::kPreemption,
        AlgorithmId::kSieveStreaming, AlgorithmId::kSieveStreamingPP,
        AlgorithmId::kSalsa, AlgorithmId::kQuickStream,
        AlgorithmId::kThreeSieves}) {
    if (algorithm_name(id) == name) return id;
  }
  throw ConfigError("unknown algorithm '" + name + "'");
}

// One algorithm cell of the grid; unused fields are ignored by algorithms
// that do not take them.
struct AlgorithmSpec {
  AlgorithmId id = AlgorithmId::kThreeSieves;
  std::uint64_t k = 10;
  double epsilon = 0.001;

  // ThreeSieves patience: T directly, or derived from (alpha, tau)
  std::optional<std::uint64_t> t;
  std::optional<double> alpha;
  std::optional<double> tau;

  std::optional<double> nu;                  // StreamGreedy (mandatory there)
  std::optional<std::uint64_t> max_passes;   // StreamGreedy, default K
  double preemption_c = 1.0;
  std::uint64_t quickstream_c = 1;

  bool estimate_m = false;                   // otherwise analytic/known m
  std::optional<double> m_override;
  SalsaRules salsa_rules = SalsaRules::all();
  std::optional<std::uint64_t> length_hint;  // Salsa sparse rule
};

enum class Protocol { kBatch, kStream };

enum class ObjectiveKind { kLogDet, kCoverage };

struct ExperimentSpec {
  // exactly one source
  std::optional<std::string> csv_path;
  CsvOptions csv_options;
  std::optional<SyntheticSpec> synthetic;

  ObjectiveKind objective = ObjectiveKind::kLogDet;
  double a = 1.0;
  std::optional<double> length_scale;        // default depends on protocol
  std::vector<double> coverage_weights;      // coverage objective only

  Protocol protocol = Protocol::kBatch;
  std::vector<AlgorithmSpec> algorithms;
  std::vector<std::uint64_t> seeds{0};       // one repetition per seed
  std::uint64_t parallel = 1;
};

namespace detail {

inline RuleOfThreeConfig patience_from_spec(const AlgorithmSpec& spec) {
  if (spec.t && (spec.alpha || spec.tau)) {
    throw ConfigError("supply either T or (alpha, tau), not both");
  }
  if (spec.t) return RuleOfThreeConfig::direct(*spec.t);
  if (spec.alpha && spec.tau) {
    return RuleOfThreeConfig::from_confidence(*spec.alpha, *spec.tau);
  }
  if (spec.alpha || spec.tau) {
    throw ConfigError("alpha and tau must be supplied together");
  }
  return RuleOfThreeConfig::direct(5000);  // paper's strongest batch setting
}

inline MPolicy m_policy_from_spec(const AlgorithmSpec& spec,
                                  const Objective& objective, double a,
                                  ObjectiveKind kind) {
  if (spec.estimate_m) return MPolicy::estimate();
  if (spec.m_override) return MPolicy::known(*spec.m_override);
  if (kind == ObjectiveKind::kLogDet) {
    return MPolicy::known(logdet_singleton_bound(a));
  }
  (void)objective;
  throw ConfigError(
      "known m requires an m override for non-analytic objectives");
}

inline std::unique_ptr<StreamAlgorithm> make_stream_algorithm(
    const AlgorithmSpec& spec, std::uint64_t seed, const Objective& objective,
    double a, ObjectiveKind kind) {
  switch (spec.id) {
    case AlgorithmId::kRandom:
      return std::make_unique<RandomSelection>(spec.k, seed, objective);
    case AlgorithmId::kIsi:
      return std::make_unique<IndependentSetImprovement>(spec.k, objective);
    case AlgorithmId::kPreemption:
      return std::make_unique<PreemptionStreaming>(spec.k, spec.preemption_c,
                                                   objective);
    case AlgorithmId::kSieveStreaming:
      return std::make_unique<SieveStreaming>(
          spec.k, spec.epsilon, m_policy_from_spec(spec, objective, a, kind),
          objective);
    case AlgorithmId::kSieveStreamingPP:
      return std::make_unique<SieveStreamingPP>(
          spec.k, spec.epsilon, m_policy_from_spec(spec, objective, a, kind),
          objective);
    case AlgorithmId::kSalsa: {
      const MPolicy policy = m_policy_from_spec(spec, objective, a, kind);
      if (!policy.is_known()) {
        throw ConfigError("salsa requires known m");
      }
      return std::make_unique<Salsa>(spec.k, spec.epsilon, policy.m,
                                     spec.salsa_rules, spec.length_hint,
                                     objective);
    }
    case AlgorithmId::kQuickStream:
      return std::make_unique<QuickStream>(spec.k, spec.quickstream_c,
                                           spec.epsilon, seed, objective);
    case AlgorithmId::kThreeSieves:
      return std::make_unique<ThreeSieves>(
          spec.k, spec.epsilon, patience_from_spec(spec),
          m_policy_from_spec(spec, objective, a, kind), objective);
    case AlgorithmId::kGreedy:
    case AlgorithmId::kStreamGreedy:
      break;
  }
  throw ConfigError("not a single-object streaming algorithm");
}

}  // namespace detail

inline Dataset load_experiment_data(const ExperimentSpec& spec) {
  if (spec.csv_path.has_value() == spec.synthetic.has_value()) {
    throw ConfigError("specify exactly one of csv path or synthetic stream");
  }
  if (spec.csv_path) return load_csv(*spec.csv_path, spec.csv_options);
  return generate(*spec.synthetic);
}

inline std::unique_ptr<Objective> make_experiment_objective(
    const ExperimentSpec& spec, std::size_t d) {
  if (spec.objective == ObjectiveKind::kCoverage) {
    if (spec.coverage_weights.empty()) {
      throw ConfigError("coverage objective needs universe weights");
    }
    return std::make_unique<CoverageObjective>(spec.coverage_weights);
  }
  double l;
  if (spec.length_scale) {
    l = *spec.length_scale;
  } else if (spec.protocol == Protocol::kBatch) {
    l = default_batch_length_scale(d);
  } else {
    l = default_stream_length_scale(d);
  }
  return std::make_unique<LogDetObjective>(spec.a, RbfKernel(l));
}

inline void validate_experiment(const ExperimentSpec& spec) {
  if (spec.algorithms.empty()) {
    throw ConfigError("experiment needs at least one algorithm");
  }
  if (spec.seeds.empty()) {
    throw ConfigError("experiment needs at least one seed");
  }
  for (const AlgorithmSpec& algo : spec.algorithms) {
    if (spec.protocol == Protocol::kStream &&
        (algo.id == AlgorithmId::kGreedy ||
         algo.id == AlgorithmId::kStreamGreedy)) {
      throw ConfigError(algorithm_name(algo.id) +
                        " is not a streaming algorithm; use --protocol batch");
    }
    if (algo.id == AlgorithmId::kStreamGreedy && !algo.nu) {
      throw ConfigError("stream-greedy requires nu");
    }
  }
}

// Executes every (algorithm, seed) cell.  For synthetic sources each seed
// draws an independent stream, so repetitions are statistically meaningful
// for deterministic algorithms too; for csv sources the data is fixed and
// seeds only steer the seeded algorithms.  Batch protocol re-feeds the data
// until K elements are selected (at most K passes); stream protocol feeds
// each item exactly once.  A Greedy reference runs batch-fashion for every
// (K, seed) not already covered by a user-listed Greedy cell, and every
// report gets its relative performance against the Greedy run on the same
// instance.  Per-cell failures are recorded on the report, not fatal.
inline std::vector<RunReport> run_experiment(const ExperimentSpec& spec) {
  validate_experiment(spec);

  // one dataset per seed for synthetic sources, one shared dataset for csv
  std::vector<Dataset> datasets;
  std::vector<std::size_t> dataset_of_seed(spec.seeds.size(), 0);
  if (spec.synthetic) {
    for (std::size_t si = 0; si < spec.seeds.size(); ++si) {
      SyntheticSpec draw = *spec.synthetic;
      draw.seed += spec.seeds[si];
      datasets.push_back(generate(draw));
      dataset_of_seed[si] = si;
    }
  } else {
    datasets.push_back(load_experiment_data(spec));
  }
  const std::size_t d = datasets[0].empty() ? 1 : datasets[0][0].dim();
  const std::unique_ptr<Objective> objective =
      make_experiment_objective(spec, d);

  struct Cell {
    AlgorithmSpec algo;
    std::uint64_t seed = 0;
    std::size_t dataset = 0;
  };
  std::vector<Cell> cells;
  for (std::size_t si = 0; si < spec.seeds.size(); ++si) {
    const std::uint64_t seed = spec.seeds[si];
    const std::size_t dataset = dataset_of_seed[si];
    for (const AlgorithmSpec& algo : spec.algorithms) {
      cells.push_back(Cell{algo, seed, dataset});
    }
    std::vector<std::uint64_t> reference_ks;
    for (const AlgorithmSpec& algo : spec.algorithms) {
      bool have = false;
      for (std::uint64_t k : reference_ks) have |= (k == algo.k);
      for (const AlgorithmSpec& other : spec.algorithms) {
        have |= (other.id == AlgorithmId::kGreedy && other.k == algo.k);
      }
      if (!have) reference_ks.push_back(algo.k);
    }
    for (std::uint64_t k : reference_ks) {
      AlgorithmSpec ref;
      ref.id = AlgorithmId::kGreedy;
      ref.k = k;
      cells.push_back(Cell{ref, seed, dataset});
    }
  }

  std::vector<RunReport> reports(cells.size());
  auto run_cell = [&](std::size_t index) {
    const Cell& cell = cells[index];
    const Dataset& data = datasets[cell.dataset];
    RunReport& report = reports[index];
    try {
      switch (cell.algo.id) {
        case AlgorithmId::kGreedy:
          report = run_greedy(data, cell.algo.k, *objective);
          report.seed = cell.seed;
          break;
        case AlgorithmId::kStreamGreedy:
          report = run_stream_greedy(data, cell.algo.k, *cell.algo.nu,
                                     cell.algo.max_passes.value_or(cell.algo.k),
                                     *objective);
          report.seed = cell.seed;
          break;
        default: {
          auto algo = detail::make_stream_algorithm(
              cell.algo, cell.seed, *objective, spec.a, spec.objective);
          report = (spec.protocol == Protocol::kBatch) ? run_batch(*algo, data)
                                                       : run_stream(*algo, data);
          report.seed = cell.seed;
          break;
        }
      }
    } catch (const Error& err) {
      report.algorithm = algorithm_name(cell.algo.id);
      report.k = cell.algo.k;
      report.seed = cell.seed;
      report.error = err.what();
    }
  };

  const std::uint64_t width = std::max<std::uint64_t>(1, spec.parallel);
  if (width == 1 || cells.size() <= 1) {
    for (std::size_t i = 0; i < cells.size(); ++i) run_cell(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> workers;
    const std::uint64_t n_workers =
        std::min<std::uint64_t>(width, cells.size());
    workers.reserve(n_workers);
    for (std::uint64_t w = 0; w < n_workers; ++w) {
      workers.emplace_back([&]() {
        while (true) {
          const std::size_t i = next.fetch_add(1);
          if (i >= cells.size()) return;
          run_cell(i);
        }
      });
    }
    for (std::thread& worker : workers) worker.join();
  }

  // relative performance against the Greedy run on the same instance
  for (std::size_t i = 0; i < reports.size(); ++i) {
    RunReport& report = reports[i];
    if (!report.error.empty()) continue;
    const RunReport* reference = nullptr;
    for (std::size_t j = 0; j < reports.size(); ++j) {
      if (reports[j].algorithm == "greedy" && reports[j].error.empty() &&
          reports[j].k == report.k && cells[j].dataset == cells[i].dataset) {
        reference = &reports[j];
        break;
      }
    }
    if (reference == nullptr) continue;
    if (reference->fvalue > 0.0) {
      report.relative_perf =
          relative_performance(report.fvalue, reference->fvalue);
    } else if (report.fvalue == 0.0) {
      report.relative_perf = 0.0;
    }
  }
  return reports;
}

}  // namespace submax

#endif  // SUBMAX_HARNESS_EXPERIMENT_HPP
