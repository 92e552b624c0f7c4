#ifndef SUBMAX_HARNESS_REPORT_IO_HPP
#define SUBMAX_HARNESS_REPORT_IO_HPP

#include <algorithm>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "submax/detail/util.hpp"
#include "submax/errors.hpp"
#include "submax/report.hpp"

namespace submax {

enum class ReportFormat { kCsv, kJson };

// Measured wall times differ between otherwise identical runs; zeroing them
// keeps report files byte-identical for the same configuration and inputs.
enum class WallTimeMode { kZero, kMeasured };

namespace detail {

inline std::string report_sort_key(const RunReport& r) {
  std::ostringstream key;
  key << r.algorithm << '\x1f' << r.k << '\x1f'
      << (r.epsilon ? fmt_double(*r.epsilon) : "-") << '\x1f'
      << (r.t ? std::to_string(*r.t) : "-") << '\x1f';
  for (const auto& [name, value] : r.extra_config) {
    key << name << '=' << value << '\x1f';
  }
  key << r.seed;
  return key.str();
}

inline std::vector<const RunReport*> sorted_reports(
    const std::vector<RunReport>& reports) {
  std::vector<const RunReport*> order;
  order.reserve(reports.size());
  for (const RunReport& r : reports) order.push_back(&r);
  std::stable_sort(order.begin(), order.end(),
                   [](const RunReport* a, const RunReport* b) {
                     return report_sort_key(*a) < report_sort_key(*b);
                   });
  return order;
}

}  // namespace detail

inline std::string render_report_csv(const std::vector<RunReport>& reports,
                                     WallTimeMode wall_time) {
  std::ostringstream out;
  out << "algorithm,K,epsilon,T,seed,fvalue,relative_performance,"
         "oracle_queries,peak_elements,peak_candidates,passes,wall_time_ms,"
         "error\n";
  for (const RunReport* r : detail::sorted_reports(reports)) {
    out << r->algorithm << ',' << r->k << ','
        << (r->epsilon ? detail::fmt_double(*r->epsilon) : "") << ','
        << (r->t ? std::to_string(*r->t) : "") << ',' << r->seed << ','
        << detail::fmt_double(r->fvalue) << ','
        << (r->relative_perf ? detail::fmt_double(*r->relative_perf) : "")
        << ',' << r->counters.oracle_queries << ','
        << r->counters.peak_elements << ',' << r->counters.peak_candidates
        << ',' << r->counters.passes << ','
        << detail::fmt_double(wall_time == WallTimeMode::kMeasured
                                  ? r->wall_time_ms
                                  : 0.0)
        << ',' << r->error << '\n';
  }
  return out.str();
}

inline std::string render_report_json(const std::vector<RunReport>& reports,
                                      WallTimeMode wall_time) {
  nlohmann::ordered_json array = nlohmann::ordered_json::array();
  for (const RunReport* r : detail::sorted_reports(reports)) {
    nlohmann::ordered_json record;
    record["algorithm"] = r->algorithm;
    record["K"] = r->k;
    if (r->epsilon) {
      record["epsilon"] = *r->epsilon;
    } else {
      record["epsilon"] = nullptr;
    }
    if (r->t) {
      record["T"] = *r->t;
    } else {
      record["T"] = nullptr;
    }
    record["seed"] = r->seed;
    record["fvalue"] = r->fvalue;
    if (r->relative_perf) {
      record["relative_performance"] = *r->relative_perf;
    } else {
      record["relative_performance"] = nullptr;
    }
    record["oracle_queries"] = r->counters.oracle_queries;
    record["peak_elements"] = r->counters.peak_elements;
    record["peak_candidates"] = r->counters.peak_candidates;
    record["passes"] = r->counters.passes;
    record["wall_time_ms"] =
        wall_time == WallTimeMode::kMeasured ? r->wall_time_ms : 0.0;
    record["error"] = r->error;
    for (const auto& [name, value] : r->extra_config) {
      record["config_" + name] = value;
    }
    array.push_back(std::move(record));
  }
  return array.dump(2) + "\n";
}

// One record per run with a stable column set and config-lexicographic row
// order; re-emitting identical reports yields a byte-identical file.
inline void emit_report(const std::vector<RunReport>& reports,
                        ReportFormat format, const std::string& path,
                        WallTimeMode wall_time = WallTimeMode::kZero) {
  if (reports.empty()) {
    throw ConfigError("emit_report requires at least one report");
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw IoError("cannot open '" + path + "' for writing");
  }
  out << (format == ReportFormat::kCsv
              ? render_report_csv(reports, wall_time)
              : render_report_json(reports, wall_time));
  if (!out) {
    throw IoError("write failure on '" + path + "'");
  }
}

}  // namespace submax

#endif  // SUBMAX_HARNESS_REPORT_IO_HPP
