#ifndef SUBMAX_TOOLS_CLI_APP_HPP
#define SUBMAX_TOOLS_CLI_APP_HPP

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "submax/submax.hpp"

namespace submax::cli {

struct DatasetFlags {
  std::string input;
  std::string delimiter = ",";
  std::string header = "auto";
  std::string synthetic;  // "iid" or "drift"
  std::uint64_t n = 2000;
  std::uint64_t d = 5;
  std::uint64_t components = 6;
  std::uint64_t change_points = 5;
  double scale = 0.1;
  double mean_spread = 1.0;
  std::uint64_t data_seed = 0;
};

inline void add_dataset_flags(CLI::App* cmd, DatasetFlags* flags) {
  cmd->add_option("--input", flags->input, "CSV file of numeric rows");
  cmd->add_option("--delimiter", flags->delimiter, "CSV delimiter")
      ->default_str(",");
  cmd->add_option("--header", flags->header,
                  "CSV header handling: auto|yes|no");
  cmd->add_option("--synthetic", flags->synthetic,
                  "generate a stream instead of reading one: iid|drift");
  cmd->add_option("--n", flags->n, "synthetic stream length");
  cmd->add_option("--d", flags->d, "synthetic dimensionality");
  cmd->add_option("--components", flags->components,
                  "synthetic mixture components");
  cmd->add_option("--change-points", flags->change_points,
                  "drift change points");
  cmd->add_option("--scale", flags->scale, "synthetic component scale");
  cmd->add_option("--mean-spread", flags->mean_spread,
                  "synthetic component mean spread");
  cmd->add_option("--data-seed", flags->data_seed, "synthetic base seed");
}

inline void apply_dataset_flags(const DatasetFlags& flags,
                                ExperimentSpec* spec) {
  if (flags.input.empty() == flags.synthetic.empty()) {
    throw ConfigError("supply exactly one of --input or --synthetic");
  }
  if (!flags.input.empty()) {
    spec->csv_path = flags.input;
    if (flags.delimiter.size() != 1) {
      throw ConfigError("--delimiter must be a single character");
    }
    spec->csv_options.delimiter = flags.delimiter[0];
    if (flags.header == "auto") {
      spec->csv_options.header = CsvOptions::Header::kAuto;
    } else if (flags.header == "yes") {
      spec->csv_options.header = CsvOptions::Header::kYes;
    } else if (flags.header == "no") {
      spec->csv_options.header = CsvOptions::Header::kNo;
    } else {
      throw ConfigError("--header must be auto, yes or no");
    }
  } else {
    SyntheticSpec::Kind kind;
    if (flags.synthetic == "iid") {
      kind = SyntheticSpec::Kind::kIid;
    } else if (flags.synthetic == "drift") {
      kind = SyntheticSpec::Kind::kDrift;
    } else {
      throw ConfigError("--synthetic must be iid or drift");
    }
    spec->synthetic = make_mixture_spec(
        kind, flags.n, flags.d, flags.components,
        kind == SyntheticSpec::Kind::kDrift ? flags.change_points : 0,
        flags.scale, flags.data_seed, flags.mean_spread);
  }
}

struct AlgoFlags {
  std::string algorithm;
  std::uint64_t k = 10;
  double epsilon = 0.001;
  std::optional<std::uint64_t> t;
  std::optional<double> alpha;
  std::optional<double> tau;
  std::optional<double> nu;
  std::optional<std::uint64_t> max_passes;
  double c = 1.0;
  std::string m_policy = "known";
  std::optional<double> m_override;
  std::optional<std::uint64_t> length_hint;
};

inline void add_hyperparameter_flags(CLI::App* cmd, AlgoFlags* flags) {
  cmd->add_option("--k", flags->k, "summary capacity K")->required();
  cmd->add_option("--epsilon", flags->epsilon, "grid parameter epsilon");
  auto* t_opt = cmd->add_option("--T", flags->t, "ThreeSieves patience T");
  auto* alpha_opt =
      cmd->add_option("--alpha", flags->alpha, "Rule of Three confidence");
  auto* tau_opt =
      cmd->add_option("--tau", flags->tau, "Rule of Three certainty margin");
  t_opt->excludes(alpha_opt)->excludes(tau_opt);
  alpha_opt->needs(tau_opt);
  tau_opt->needs(alpha_opt);
  cmd->add_option("--nu", flags->nu, "StreamGreedy improvement threshold");
  cmd->add_option("--max-passes", flags->max_passes,
                  "StreamGreedy pass limit (default K)");
  cmd->add_option("--c", flags->c,
                  "Preemption threshold factor / QuickStream buffer size");
  cmd->add_option("--m-policy", flags->m_policy,
                  "maximum singleton value: known|estimate");
  cmd->add_option("--m", flags->m_override, "explicit known m");
  cmd->add_option("--length-hint", flags->length_hint,
                  "stream length hint for Salsa's sparse rule");
}

inline AlgorithmSpec algorithm_from_flags(const AlgoFlags& flags) {
  AlgorithmSpec spec;
  spec.id = algorithm_from_name(flags.algorithm);
  spec.k = flags.k;
  spec.epsilon = flags.epsilon;
  spec.t = flags.t;
  spec.alpha = flags.alpha;
  spec.tau = flags.tau;
  spec.nu = flags.nu;
  spec.max_passes = flags.max_passes;
  spec.preemption_c = flags.c;
  if (spec.id == AlgorithmId::kQuickStream) {
    if (flags.c < 1.0 || flags.c != std::floor(flags.c)) {
      throw ConfigError("quickstream --c must be a positive integer");
    }
    spec.quickstream_c = static_cast<std::uint64_t>(flags.c);
  }
  if (flags.m_policy == "estimate") {
    spec.estimate_m = true;
  } else if (flags.m_policy != "known") {
    throw ConfigError("--m-policy must be known or estimate");
  }
  spec.m_override = flags.m_override;
  spec.length_hint = flags.length_hint;
  return spec;
}

inline void print_human_summary(const RunReport& report, std::ostream& out) {
  out << report.algorithm << "  K=" << report.k;
  if (report.epsilon) out << "  eps=" << *report.epsilon;
  if (report.t) out << "  T=" << *report.t;
  out << "  seed=" << report.seed << "\n"
      << "  f(S) = " << report.fvalue
      << "  |S| = " << report.summary.size();
  if (report.relative_perf) {
    out << "  relative = " << *report.relative_perf;
  }
  out << "\n  queries = " << report.counters.oracle_queries
      << "  elements = " << report.counters.peak_elements
      << "  candidates = " << report.counters.peak_candidates
      << "  passes = " << report.counters.passes
      << "  time = " << report.wall_time_ms << " ms\n";
  if (!report.error.empty()) out << "  error: " << report.error << "\n";
}

// Loads a flat key=value file (blank lines and # comments ignored) and
// appends each entry as "--key value" unless that flag already appears.
inline std::vector<std::string> expand_config(std::vector<std::string> args) {
  std::size_t config_at = args.size();
  for (std::size_t i = 0; i + 1 < args.size(); ++i) {
    if (args[i] == "--config") config_at = i;
  }
  if (config_at == args.size()) return args;
  const std::string path = args[config_at + 1];
  args.erase(args.begin() + static_cast<std::ptrdiff_t>(config_at),
             args.begin() + static_cast<std::ptrdiff_t>(config_at) + 2);

  std::ifstream in(path);
  if (!in) throw IoError("cannot open config file '" + path + "'");
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view view(line);
    while (!view.empty() && (view.front() == ' ' || view.front() == '\t')) {
      view.remove_prefix(1);
    }
    while (!view.empty() &&
           (view.back() == ' ' || view.back() == '\t' || view.back() == '\r')) {
      view.remove_suffix(1);
    }
    if (view.empty() || view.front() == '#') continue;
    const std::size_t eq = view.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError("config line " + std::to_string(line_no) +
                        ": expected key=value");
    }
    std::string key(view.substr(0, eq));
    std::string value(view.substr(eq + 1));
    while (!key.empty() && (key.back() == ' ' || key.back() == '\t')) {
      key.pop_back();
    }
    while (!value.empty() && (value.front() == ' ' || value.front() == '\t')) {
      value.erase(value.begin());
    }
    if (key.empty()) {
      throw ConfigError("config line " + std::to_string(line_no) +
                        ": empty key");
    }
    const std::string flag = "--" + key;
    bool already = false;
    for (const std::string& arg : args) already |= (arg == flag);
    if (!already) {
      args.push_back(flag);
      args.push_back(value);
    }
  }
  return args;
}

inline int cli_main(int argc, const char* const* argv) {
  CLI::App app{
      "Cardinality-constrained monotone submodular maximization: batch and "
      "streaming algorithms, a log-determinant diversity objective and an "
      "experiment harness"};
  app.require_subcommand(1);

  // ---- run ----
  auto* run_cmd =
      app.add_subcommand("run", "run one algorithm and print its report");
  DatasetFlags run_data;
  AlgoFlags run_algo;
  std::string run_protocol = "batch";
  double run_a = 1.0;
  std::optional<double> run_l;
  std::uint64_t run_seed = 0;
  std::string run_output;
  std::string run_format = "csv";
  bool run_measure_time = false;
  add_dataset_flags(run_cmd, &run_data);
  run_cmd->add_option("--algorithm", run_algo.algorithm,
                      "greedy|random|isi|stream-greedy|preemption|"
                      "sieve-streaming|sieve-streaming-pp|salsa|quickstream|"
                      "three-sieves")
      ->required();
  add_hyperparameter_flags(run_cmd, &run_algo);
  run_cmd->add_option("--protocol", run_protocol, "batch|stream");
  run_cmd->add_option("--a", run_a, "log-det scale a");
  run_cmd->add_option("--l", run_l,
                      "RBF length scale (default 1/(2 sqrt d) batch, "
                      "1/sqrt d stream)");
  run_cmd->add_option("--seed", run_seed, "run seed");
  run_cmd->add_option("--output", run_output, "write the report here");
  run_cmd->add_option("--format", run_format, "csv|json");
  run_cmd->add_flag("--measure-time", run_measure_time,
                    "emit measured wall times instead of zeros");

  // ---- grid ----
  auto* grid_cmd = app.add_subcommand(
      "grid", "run an experiment grid and write a report file");
  std::string grid_config_path;
  grid_cmd->add_option("--config", grid_config_path,
                       "flat key=value file with these same options "
                       "(explicit flags win)");
  DatasetFlags grid_data;
  std::vector<std::string> grid_algorithms;
  std::vector<std::uint64_t> grid_ks{10};
  std::vector<double> grid_epsilons{0.001};
  std::vector<std::uint64_t> grid_ts;
  std::optional<double> grid_alpha;
  std::optional<double> grid_tau;
  std::optional<double> grid_nu;
  double grid_c = 1.0;
  std::string grid_m_policy = "known";
  std::optional<std::uint64_t> grid_length_hint;
  std::vector<std::uint64_t> grid_seeds;
  std::uint64_t grid_repetitions = 1;
  std::string grid_protocol = "batch";
  double grid_a = 1.0;
  std::optional<double> grid_l;
  std::string grid_output;
  std::string grid_format = "csv";
  bool grid_measure_time = false;
  std::uint64_t grid_parallel = 0;
  add_dataset_flags(grid_cmd, &grid_data);
  grid_cmd
      ->add_option("--algorithms", grid_algorithms,
                   "comma-separated algorithm list")
      ->required()
      ->delimiter(',');
  grid_cmd->add_option("--k", grid_ks, "K values")->delimiter(',');
  grid_cmd->add_option("--epsilon", grid_epsilons, "epsilon values")
      ->delimiter(',');
  auto* grid_t_opt =
      grid_cmd->add_option("--T", grid_ts, "ThreeSieves patience values")
          ->delimiter(',');
  auto* grid_alpha_opt =
      grid_cmd->add_option("--alpha", grid_alpha, "Rule of Three confidence");
  auto* grid_tau_opt =
      grid_cmd->add_option("--tau", grid_tau, "Rule of Three margin");
  grid_t_opt->excludes(grid_alpha_opt)->excludes(grid_tau_opt);
  grid_alpha_opt->needs(grid_tau_opt);
  grid_tau_opt->needs(grid_alpha_opt);
  grid_cmd->add_option("--nu", grid_nu, "StreamGreedy threshold");
  grid_cmd->add_option("--c", grid_c, "Preemption/QuickStream c");
  grid_cmd->add_option("--m-policy", grid_m_policy, "known|estimate");
  grid_cmd->add_option("--length-hint", grid_length_hint,
                       "Salsa stream length hint");
  grid_cmd->add_option("--seeds", grid_seeds, "explicit seed list")
      ->delimiter(',');
  grid_cmd->add_option("--repetitions", grid_repetitions,
                       "seeds 0..R-1 when --seeds is absent");
  grid_cmd->add_option("--protocol", grid_protocol, "batch|stream");
  grid_cmd->add_option("--a", grid_a, "log-det scale a");
  grid_cmd->add_option("--l", grid_l, "RBF length scale");
  grid_cmd->add_option("--output", grid_output, "report file")->required();
  grid_cmd->add_option("--format", grid_format, "csv|json");
  grid_cmd->add_flag("--measure-time", grid_measure_time,
                     "emit measured wall times instead of zeros");
  grid_cmd->add_option("--parallel", grid_parallel,
                       "worker threads (default SUBMAX_PARALLEL or 1)")
      ->envname("SUBMAX_PARALLEL");

  // ---- verify ----
  auto* verify_cmd = app.add_subcommand(
      "verify", "run the brute-force oracle suite and report each contract");
  std::uint64_t verify_seed = 7;
  std::uint64_t verify_instances = 25;
  verify_cmd->add_option("--seed", verify_seed, "suite seed");
  verify_cmd->add_option("--instances", verify_instances,
                         "instances per objective");

  std::vector<std::string> args(argv + 1, argv + argc);
  try {
    if (!args.empty() && args.front() == "grid") {
      args = expand_config(args);
    }
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  std::vector<const char*> cargv;
  cargv.push_back(argc > 0 ? argv[0] : "submax");
  for (const std::string& arg : args) cargv.push_back(arg.c_str());

  try {
    app.parse(static_cast<int>(cargv.size()), cargv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  try {
    if (run_cmd->parsed()) {
      ExperimentSpec spec;
      apply_dataset_flags(run_data, &spec);
      spec.a = run_a;
      spec.length_scale = run_l;
      if (run_protocol == "batch") {
        spec.protocol = Protocol::kBatch;
      } else if (run_protocol == "stream") {
        spec.protocol = Protocol::kStream;
      } else {
        throw ConfigError("--protocol must be batch or stream");
      }
      spec.algorithms = {algorithm_from_flags(run_algo)};
      spec.seeds = {run_seed};
      const std::vector<RunReport> reports = run_experiment(spec);
      for (const RunReport& report : reports) {
        if (report.algorithm == run_algo.algorithm || reports.size() == 1) {
          print_human_summary(report, std::cout);
        }
      }
      if (!run_output.empty()) {
        emit_report(reports,
                    run_format == "json" ? ReportFormat::kJson
                                         : ReportFormat::kCsv,
                    run_output,
                    run_measure_time ? WallTimeMode::kMeasured
                                     : WallTimeMode::kZero);
        std::cout << "report written to " << run_output << "\n";
      }
      for (const RunReport& report : reports) {
        if (!report.error.empty()) return 2;
      }
      return 0;
    }

    if (grid_cmd->parsed()) {
      ExperimentSpec spec;
      apply_dataset_flags(grid_data, &spec);
      spec.a = grid_a;
      spec.length_scale = grid_l;
      if (grid_protocol == "batch") {
        spec.protocol = Protocol::kBatch;
      } else if (grid_protocol == "stream") {
        spec.protocol = Protocol::kStream;
      } else {
        throw ConfigError("--protocol must be batch or stream");
      }
      if (grid_seeds.empty()) {
        for (std::uint64_t r = 0; r < grid_repetitions; ++r) {
          grid_seeds.push_back(r);
        }
      }
      spec.seeds = grid_seeds;
      spec.parallel = grid_parallel == 0 ? 1 : grid_parallel;

      for (const std::string& name : grid_algorithms) {
        AlgoFlags flags;
        flags.algorithm = name;
        flags.nu = grid_nu;
        flags.c = grid_c;
        flags.m_policy = grid_m_policy;
        flags.alpha = grid_alpha;
        flags.tau = grid_tau;
        flags.length_hint = grid_length_hint;
        const AlgorithmId id = algorithm_from_name(name);
        const bool wants_epsilon =
            id == AlgorithmId::kSieveStreaming ||
            id == AlgorithmId::kSieveStreamingPP || id == AlgorithmId::kSalsa ||
            id == AlgorithmId::kQuickStream || id == AlgorithmId::kThreeSieves;
        const bool wants_t = id == AlgorithmId::kThreeSieves;
        for (std::uint64_t k : grid_ks) {
          flags.k = k;
          const std::vector<double> eps_list =
              wants_epsilon ? grid_epsilons : std::vector<double>{0.001};
          for (double eps : eps_list) {
            flags.epsilon = eps;
            if (wants_t && !grid_ts.empty()) {
              for (std::uint64_t t : grid_ts) {
                flags.t = t;
                flags.alpha.reset();
                flags.tau.reset();
                spec.algorithms.push_back(algorithm_from_flags(flags));
              }
            } else {
              flags.t.reset();
              spec.algorithms.push_back(algorithm_from_flags(flags));
            }
          }
        }
      }

      const std::vector<RunReport> reports = run_experiment(spec);
      emit_report(reports,
                  grid_format == "json" ? ReportFormat::kJson
                                        : ReportFormat::kCsv,
                  grid_output,
                  grid_measure_time ? WallTimeMode::kMeasured
                                    : WallTimeMode::kZero);
      std::uint64_t failures = 0;
      for (const RunReport& report : reports) {
        if (!report.error.empty()) ++failures;
      }
      std::cout << reports.size() << " runs written to " << grid_output;
      if (failures > 0) std::cout << " (" << failures << " failed cells)";
      std::cout << "\n";
      return 0;
    }

    // verify
    const OracleSuiteResult result =
        run_oracle_suite(verify_seed, verify_instances, std::cout);
    std::cout << (result.ok() ? "all contracts hold" : "contract violations")
              << " (" << result.checks << " checks, " << result.failures
              << " failures)\n";
    return result.ok() ? 0 : 2;
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}

inline int cli_main(const std::vector<std::string>& args) {
  std::vector<const char*> argv;
  argv.push_back("submax");
  for (const std::string& arg : args) argv.push_back(arg.c_str());
  return cli_main(static_cast<int>(argv.size()), argv.data());
}

}  // namespace submax::cli

#endif  // SUBMAX_TOOLS_CLI_APP_HPP
