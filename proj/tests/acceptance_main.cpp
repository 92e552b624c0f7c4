// Acceptance suite: one pass/fail line per criterion, nonzero exit when any
// criterion fails.  Each criterion carries its wall-clock budget.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <memory>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "submax/submax.hpp"

using namespace submax;
using submax_tests::dense_logdet;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

double median(std::vector<double> values) {
  std::sort(values.begin(), values.end());
  const std::size_t n = values.size();
  return n % 2 == 1 ? values[n / 2]
                    : 0.5 * (values[n / 2 - 1] + values[n / 2]);
}

std::string fmt(double x) {
  std::ostringstream out;
  out.precision(4);
  out << x;
  return out.str();
}

// ---------------------------------------------------------------------------
// 1. incremental log-det vs dense from-scratch evaluation

Outcome check_objective_correctness() {
  Outcome outcome;
  std::mt19937_64 rng(101);
  double worst = 0.0;
  int sets = 0;
  for (std::size_t d : {std::size_t{2}, std::size_t{5}, std::size_t{10}}) {
    RbfKernel kernel(default_batch_length_scale(d));
    for (int rep = 0; rep < 34; ++rep) {
      const std::size_t size = 1 + detail::uniform_below(rng, 50);
      Dataset data = generate(make_mixture_spec(SyntheticSpec::Kind::kIid,
                                                size, d, 4, 0, 0.2, rng()));
      LogDetState state(1.0, kernel);
      for (const DataPoint& e : data) state.commit(e);
      const double dense = dense_logdet(data, 1.0, kernel);
      const double rel =
          std::abs(state.value() - dense) / std::max(1.0, std::abs(dense));
      worst = std::max(worst, rel);
      ++sets;
    }
  }
  outcome.pass = worst <= 1e-8 && sets >= 100;
  outcome.detail = std::to_string(sets) + " sets, worst rel err " + fmt(worst);
  return outcome;
}

// ---------------------------------------------------------------------------
// 2. monotonicity and submodularity on random (A subset B, e) triples

Outcome check_properties() {
  Outcome outcome;
  std::uint64_t violations = 0;
  auto run_suite = [&](const Objective& objective, const Dataset& pool,
                       std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    for (int rep = 0; rep < 1000; ++rep) {
      const std::size_t nb = 1 + detail::uniform_below(rng, 8);
      std::vector<std::size_t> indices(pool.size());
      for (std::size_t i = 0; i < pool.size(); ++i) indices[i] = i;
      for (std::size_t i = indices.size(); i > 1; --i) {
        std::swap(indices[i - 1], indices[detail::uniform_below(rng, i)]);
      }
      auto state_a = objective.make_state();
      auto state_b = objective.make_state();
      const std::size_t na = detail::uniform_below(rng, nb + 1);
      for (std::size_t i = 0; i < nb; ++i) {
        state_b->commit(pool[indices[i]]);
        if (i < na) state_a->commit(pool[indices[i]]);
      }
      const DataPoint& e = pool[indices[nb]];
      const double gain_a = state_a->peek_gain(e);
      const double gain_b = state_b->peek_gain(e);
      if (gain_b < -1e-9) ++violations;
      if (gain_a < gain_b - 1e-9) ++violations;
    }
  };

  LogDetObjective logdet(1.0, RbfKernel(default_batch_length_scale(3)));
  run_suite(logdet, random_points(30, 3, 55), 56);
  CoverageInstance coverage = random_coverage_instance(30, 8, 57);
  CoverageObjective coverage_objective(coverage.weights);
  run_suite(coverage_objective, coverage.data, 58);

  outcome.pass = violations == 0;
  outcome.detail = "2000 triples, " + std::to_string(violations) +
                   " violations";
  return outcome;
}

// ---------------------------------------------------------------------------
// small-instance suite shared by criteria 3 and 4

struct SmallInstance {
  Dataset data;
  std::unique_ptr<Objective> objective;
  double opt = 0.0;
  double m = 0.0;
};

std::vector<SmallInstance> small_instances(std::uint64_t base_seed,
                                           int per_objective) {
  std::vector<SmallInstance> instances;
  for (int rep = 0; rep < per_objective; ++rep) {
    for (int kind = 0; kind < 2; ++kind) {
      SmallInstance instance;
      const std::uint64_t seed = base_seed + 17 * rep + kind;
      if (kind == 0) {
        instance.data = random_points(12, 3, seed);
        instance.objective = std::make_unique<LogDetObjective>(
            1.0, RbfKernel(default_batch_length_scale(3)));
      } else {
        CoverageInstance cov = random_coverage_instance(12, 8, seed);
        instance.data = std::move(cov.data);
        instance.objective = std::make_unique<CoverageObjective>(cov.weights);
      }
      instance.opt =
          brute_force_opt(instance.data, 3, *instance.objective).opt;
      for (const DataPoint& e : instance.data) {
        instance.m =
            std::max(instance.m, instance.objective->singleton_value(e));
      }
      instances.push_back(std::move(instance));
    }
  }
  return instances;
}

Outcome check_greedy_guarantee() {
  Outcome outcome;
  const double bound = 1.0 - 1.0 / std::exp(1.0);
  std::uint64_t violations = 0;
  double worst = 1e300;
  const auto instances = small_instances(3000, 25);
  for (const SmallInstance& instance : instances) {
    const double f = run_greedy(instance.data, 3, *instance.objective).fvalue;
    const double ratio = f / instance.opt;
    worst = std::min(worst, ratio);
    if (f < bound * instance.opt - 1e-9) ++violations;
    if (f > instance.opt + 1e-9) ++violations;
  }
  outcome.pass = violations == 0;
  outcome.detail = std::to_string(instances.size()) + " instances, worst " +
                   fmt(worst) + " of OPT, " + std::to_string(violations) +
                   " violations";
  return outcome;
}

Outcome check_sieve_guarantees() {
  Outcome outcome;
  const double eps = 0.01;
  std::uint64_t violations = 0;
  double worst_half = 1e300;
  double worst_quarter = 1e300;
  const auto instances = small_instances(4000, 25);
  for (const SmallInstance& instance : instances) {
    const MPolicy known = MPolicy::known(instance.m);
    const double half_bound = (0.5 - eps) * instance.opt - 1e-9;
    const double f_ss = run_sieve_streaming(instance.data, 3, eps, known,
                                            *instance.objective)
                            .fvalue;
    const double f_pp = run_sieve_streaming_pp(instance.data, 3, eps, known,
                                               *instance.objective)
                            .fvalue;
    const double f_salsa =
        run_salsa(instance.data, 3, eps, instance.m, instance.data.size(),
                  *instance.objective)
            .fvalue;
    const double f_qs = run_quickstream(instance.data, 3, 1, eps, 1,
                                        *instance.objective)
                            .fvalue;
    for (double f : {f_ss, f_pp, f_salsa}) {
      worst_half = std::min(worst_half, f / instance.opt);
      if (f < half_bound) ++violations;
    }
    worst_quarter = std::min(worst_quarter, f_qs / instance.opt);
    if (f_qs < (0.25 - eps) * instance.opt - 1e-9) ++violations;
  }
  outcome.pass = violations == 0;
  outcome.detail = std::to_string(instances.size()) +
                   " instances, worst sieve " + fmt(worst_half) +
                   ", worst quickstream " + fmt(worst_quarter) + ", " +
                   std::to_string(violations) + " violations";
  return outcome;
}

// ---------------------------------------------------------------------------
// 5. ThreeSieves statistical guarantee on iid instances

Outcome check_three_sieves_statistical() {
  Outcome outcome;
  const double alpha = 0.05;
  const double tau = 0.001;
  const double eps = 0.01;
  const RuleOfThreeConfig patience =
      RuleOfThreeConfig::from_confidence(alpha, tau);
  if (patience.resolve() != 2996) {
    outcome.pass = false;
    outcome.detail = "expected T=2996, got " +
                     std::to_string(patience.resolve());
    return outcome;
  }
  const int instances = 200;
  int achieved = 0;
  for (int rep = 0; rep < instances; ++rep) {
    SyntheticSpec spec = make_mixture_spec(SyntheticSpec::Kind::kIid, 16, 2,
                                           4, 0, 0.12, 5000 + rep);
    Dataset data = generate(spec);
    LogDetObjective objective(1.0, RbfKernel(default_batch_length_scale(2)));
    const double opt = brute_force_opt(data, 3, objective).opt;
    const double f =
        run_three_sieves(data, 3, eps, patience,
                         MPolicy::known(logdet_singleton_bound(1.0)),
                         objective)
            .fvalue;
    if (f >= (1.0 - eps) * (1.0 - 1.0 / std::exp(1.0)) * opt) ++achieved;
  }
  const double fraction = static_cast<double>(achieved) / instances;
  const double target = std::pow(1.0 - alpha, 3.0) - 0.05;
  outcome.pass = fraction >= target;
  outcome.detail = "fraction " + fmt(fraction) + " vs target " + fmt(target);
  return outcome;
}

// ---------------------------------------------------------------------------
// 6. Rule of Three worked example

Outcome check_rule_of_three() {
  Outcome outcome;
  const std::uint64_t t = rule_of_three_T(0.05, 0.003);
  const double bound_t = -std::log(0.05) / static_cast<double>(t);
  const double bound_1000 = -std::log(0.05) / 1000.0;
  outcome.pass = bound_t <= 0.003 * (1.0 + 1e-12) && bound_1000 <= 0.003 &&
                 std::abs(bound_1000 - 3.0 / 1000.0) < 2e-4;
  outcome.detail = "T=" + std::to_string(t) + ", bound " + fmt(bound_t) +
                   "; bound at T=1000 " + fmt(bound_1000);
  return outcome;
}

// ---------------------------------------------------------------------------
// 7. resource contracts on a 10^4-item stream

Outcome check_resource_contracts() {
  Outcome outcome;
  const std::uint64_t n = 10000;
  const std::uint64_t k = 20;
  const double eps = 0.001;
  SyntheticSpec spec =
      make_mixture_spec(SyntheticSpec::Kind::kIid, n, 5, 10, 0, 0.1, 777);
  Dataset data = generate(spec);
  LogDetObjective objective(1.0, RbfKernel(default_stream_length_scale(5)));
  const double m = logdet_singleton_bound(1.0);
  const MPolicy known = MPolicy::known(m);

  RunReport ts = run_three_sieves(data, k, eps, RuleOfThreeConfig::direct(500),
                                  known, objective);
  RunReport ss = run_sieve_streaming(data, k, eps, known, objective);
  RunReport pp = run_sieve_streaming_pp(data, k, eps, known, objective);
  const std::uint64_t grid_size = grid_make(m, k, eps).size();

  std::ostringstream detail;
  bool pass = true;
  if (ts.counters.peak_candidates != 1) pass = false;
  if (ts.counters.oracle_queries > n + k * ts.counters.resets) pass = false;
  if (ss.counters.peak_candidates != grid_size) pass = false;
  if (pp.counters.peak_elements > ss.counters.peak_elements) pass = false;
  detail << "three-sieves candidates=" << ts.counters.peak_candidates
         << " queries=" << ts.counters.oracle_queries << "<=" << n
         << "; sieve-streaming candidates=" << ss.counters.peak_candidates
         << " (grid " << grid_size << ")"
         << "; elements pp=" << pp.counters.peak_elements
         << " <= ss=" << ss.counters.peak_elements;
  outcome.pass = pass;
  outcome.detail = detail.str();
  return outcome;
}

// ---------------------------------------------------------------------------
// 8. batch comparison at desk scale

Outcome check_batch_figure() {
  Outcome outcome;
  std::ostringstream detail;
  bool pass = true;
  for (std::uint64_t k : {std::uint64_t{20}, std::uint64_t{50}}) {
    ExperimentSpec spec;
    spec.synthetic =
        make_mixture_spec(SyntheticSpec::Kind::kIid, 10000, 5, 10, 0, 0.1, 0);
    spec.protocol = Protocol::kBatch;
    spec.parallel = 2;
    spec.seeds = {1, 2, 3, 4, 5, 6, 7, 8, 9, 10};
    for (AlgorithmId id :
         {AlgorithmId::kRandom, AlgorithmId::kIsi, AlgorithmId::kSieveStreaming,
          AlgorithmId::kSieveStreamingPP, AlgorithmId::kSalsa,
          AlgorithmId::kThreeSieves}) {
      AlgorithmSpec algo;
      algo.id = id;
      algo.k = k;
      algo.epsilon = 0.001;
      algo.t = 2500;
      algo.length_hint = 10000;
      spec.algorithms.push_back(algo);
    }
    const std::vector<RunReport> reports = run_experiment(spec);

    std::vector<double> ts_rel, ts_time, ss_time;
    std::vector<std::pair<std::string, std::vector<double>>> rel_by_algo;
    for (const RunReport& r : reports) {
      if (!r.error.empty()) {
        pass = false;
        detail << " cell error: " << r.error;
        continue;
      }
      if (r.algorithm == "greedy") continue;
      bool found = false;
      for (auto& [name, values] : rel_by_algo) {
        if (name == r.algorithm) {
          values.push_back(r.relative_perf.value_or(0.0));
          found = true;
        }
      }
      if (!found) {
        rel_by_algo.push_back(
            {r.algorithm, {r.relative_perf.value_or(0.0)}});
      }
      if (r.algorithm == "three-sieves") {
        ts_rel.push_back(r.relative_perf.value_or(0.0));
        ts_time.push_back(r.wall_time_ms);
      }
      if (r.algorithm == "sieve-streaming") ss_time.push_back(r.wall_time_ms);
    }

    const double ts_median = median(ts_rel);
    double random_median = 0.0;
    double lowest_other = 1e300;
    for (const auto& [name, values] : rel_by_algo) {
      const double med = median(values);
      if (name == "random") {
        random_median = med;
      } else {
        lowest_other = std::min(lowest_other, med);
      }
    }
    if (ts_median < 0.85) pass = false;
    if (median(ts_time) >= median(ss_time)) pass = false;
    if (random_median > lowest_other) pass = false;
    detail << " [K=" << k << "] three-sieves median rel " << fmt(ts_median)
           << ", time " << fmt(median(ts_time)) << "ms vs sieve-streaming "
           << fmt(median(ss_time)) << "ms, random median " << fmt(random_median)
           << " vs lowest other " << fmt(lowest_other) << ";";
  }
  outcome.pass = pass;
  outcome.detail = detail.str();
  return outcome;
}

// ---------------------------------------------------------------------------
// 9. drift comparison at desk scale

Outcome check_drift_figure() {
  Outcome outcome;
  ExperimentSpec spec;
  // classes close enough that greedy lands near K*m/2, the regime where the
  // pace-style sieve cutoffs discriminate (mirrors normalized embeddings)
  spec.synthetic = make_mixture_spec(SyntheticSpec::Kind::kDrift, 10000, 5, 6,
                                     5, 0.035, 0, 0.45);
  spec.protocol = Protocol::kStream;
  spec.parallel = 2;
  spec.seeds = {1, 2, 3, 4, 5, 6, 7, 8, 9, 10};
  for (AlgorithmId id :
       {AlgorithmId::kRandom, AlgorithmId::kIsi, AlgorithmId::kSieveStreamingPP,
        AlgorithmId::kThreeSieves}) {
    AlgorithmSpec algo;
    algo.id = id;
    algo.k = 20;
    algo.epsilon = 0.01;
    algo.t = 2500;
    spec.algorithms.push_back(algo);
  }
  const std::vector<RunReport> reports = run_experiment(spec);

  std::vector<double> pp_rel, ts_rel, isi_rel, random_rel;
  for (const RunReport& r : reports) {
    if (!r.error.empty()) {
      outcome.pass = false;
      outcome.detail = "cell error: " + r.error;
      return outcome;
    }
    const double rel = r.relative_perf.value_or(0.0);
    if (r.algorithm == "sieve-streaming-pp") pp_rel.push_back(rel);
    if (r.algorithm == "three-sieves") ts_rel.push_back(rel);
    if (r.algorithm == "isi") isi_rel.push_back(rel);
    if (r.algorithm == "random") random_rel.push_back(rel);
  }
  const double pp_median = median(pp_rel);
  const double ts_median = median(ts_rel);
  const double isi_median = median(isi_rel);
  const double random_median = median(random_rel);
  outcome.pass = pp_median >= ts_median && ts_median > random_median &&
                 ts_median >= isi_median;
  outcome.detail = "medians: sieve-streaming-pp " + fmt(pp_median) +
                   ", three-sieves " + fmt(ts_median) + ", isi " +
                   fmt(isi_median) + ", random " + fmt(random_median);
  return outcome;
}

// ---------------------------------------------------------------------------
// 10. byte-identical reports on repeated runs

Outcome check_determinism() {
  Outcome outcome;
  ExperimentSpec spec;
  spec.synthetic =
      make_mixture_spec(SyntheticSpec::Kind::kDrift, 2000, 4, 5, 3, 0.1, 0);
  spec.protocol = Protocol::kStream;
  spec.parallel = 2;
  spec.seeds = {1, 2, 3};
  for (AlgorithmId id :
       {AlgorithmId::kRandom, AlgorithmId::kIsi, AlgorithmId::kPreemption,
        AlgorithmId::kSieveStreaming, AlgorithmId::kSieveStreamingPP,
        AlgorithmId::kQuickStream, AlgorithmId::kThreeSieves}) {
    AlgorithmSpec algo;
    algo.id = id;
    algo.k = 10;
    algo.epsilon = 0.05;
    algo.t = 100;
    spec.algorithms.push_back(algo);
  }
  const std::vector<RunReport> first = run_experiment(spec);
  const std::vector<RunReport> second = run_experiment(spec);
  const std::string csv_a = render_report_csv(first, WallTimeMode::kZero);
  const std::string csv_b = render_report_csv(second, WallTimeMode::kZero);
  const std::string json_a = render_report_json(first, WallTimeMode::kZero);
  const std::string json_b = render_report_json(second, WallTimeMode::kZero);
  outcome.pass = csv_a == csv_b && json_a == json_b;
  outcome.detail = outcome.pass ? "csv and json bytes identical"
                                : "byte mismatch between repeated runs";
  return outcome;
}

}  // namespace

int main(int argc, char** argv) {
  struct Criterion {
    int id;
    std::string name;
    double budget_seconds;
    std::function<Outcome()> run;
  };
  std::vector<int> only;
  for (int i = 1; i < argc; ++i) {
    only.push_back(std::atoi(argv[i]));
  }
  const std::vector<Criterion> criteria = {
      {1, "objective correctness (incremental vs dense)", 5.0,
       check_objective_correctness},
      {2, "submodularity and monotonicity", 10.0, check_properties},
      {3, "greedy guarantee", 30.0, check_greedy_guarantee},
      {4, "sieve guarantees", 60.0, check_sieve_guarantees},
      {5, "three-sieves statistical guarantee", 300.0,
       check_three_sieves_statistical},
      {6, "rule of three", 5.0, check_rule_of_three},
      {7, "resource contracts", 120.0, check_resource_contracts},
      {8, "batch comparison", 600.0, check_batch_figure},
      {9, "drift comparison", 600.0, check_drift_figure},
      {10, "determinism", 120.0, check_determinism},
  };

  int failures = 0;
  for (const Criterion& criterion : criteria) {
    if (!only.empty() &&
        std::find(only.begin(), only.end(), criterion.id) == only.end()) {
      continue;
    }
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = criterion.run();
    } catch (const std::exception& e) {
      outcome.pass = false;
      outcome.detail = std::string("exception: ") + e.what();
    }
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    const bool in_budget = elapsed <= criterion.budget_seconds;
    const bool pass = outcome.pass && in_budget;
    if (!pass) ++failures;
    std::cout << (pass ? "PASS" : "FAIL") << "  criterion " << criterion.id
              << ": " << criterion.name << "  [" << fmt(elapsed) << "s of "
              << fmt(criterion.budget_seconds) << "s]  " << outcome.detail
              << (in_budget ? "" : "  (over budget)") << "\n"
              << std::flush;
  }
  std::cout << (failures == 0 ? "ALL CRITERIA PASS"
                              : std::to_string(failures) + " CRITERIA FAILED")
            << "\n";
  return failures == 0 ? 0 : 1;
}
