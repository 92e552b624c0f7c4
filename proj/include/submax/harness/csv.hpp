#ifndef SUBMAX_HARNESS_CSV_HPP
#define SUBMAX_HARNESS_CSV_HPP

#include <charconv>
#include <cmath>
#include <fstream>
#include <string>
#include <vector>

#include "submax/data_point.hpp"
#include "submax/errors.hpp"

namespace submax {

struct CsvOptions {
  char delimiter = ',';
  enum class Header { kAuto, kYes, kNo } header = Header::kAuto;
};

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) {
    s.remove_prefix(1);
  }
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' ||
                        s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

inline bool parse_cell(std::string_view cell, double* out) {
  cell = trim(cell);
  if (cell.empty()) return false;
  const char* begin = cell.data();
  const char* end = begin + cell.size();
  auto [ptr, ec] = std::from_chars(begin, end, *out);
  return ec == std::errc() && ptr == end;
}

}  // namespace detail

// Reads a numeric CSV into DataPoints; ordinals are data-row indices.
// Non-finite cells and ragged rows are rejected with the offending 1-based
// file line.  An empty file is a valid empty dataset.
inline Dataset load_csv(const std::string& path, CsvOptions options = {}) {
  std::ifstream in(path);
  if (!in) {
    throw IoError("cannot open '" + path + "' for reading");
  }

  Dataset data;
  std::string line;
  std::size_t line_no = 0;
  std::size_t dim = 0;
  bool first_content_line = true;

  while (std::getline(in, line)) {
    ++line_no;
    if (detail::trim(line).empty()) continue;

    std::vector<double> row;
    std::size_t start = 0;
    std::size_t column = 0;
    bool bad_cell = false;
    std::size_t bad_column = 0;
    while (start <= line.size()) {
      std::size_t stop = line.find(options.delimiter, start);
      if (stop == std::string::npos) stop = line.size();
      ++column;
      double value = 0.0;
      if (!detail::parse_cell(
              std::string_view(line).substr(start, stop - start), &value)) {
        bad_cell = true;
        bad_column = column;
      } else {
        row.push_back(value);
      }
      if (stop == line.size()) break;
      start = stop + 1;
    }

    if (first_content_line) {
      first_content_line = false;
      const bool treat_as_header =
          options.header == CsvOptions::Header::kYes ||
          (options.header == CsvOptions::Header::kAuto && bad_cell);
      if (treat_as_header) continue;
    }
    if (bad_cell) {
      throw ParseError(line_no, bad_column,
                       "line " + std::to_string(line_no) + ", column " +
                           std::to_string(bad_column) +
                           ": not a numeric value");
    }
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (!std::isfinite(row[j])) {
        throw ParseError(line_no, j + 1,
                         "line " + std::to_string(line_no) + ", column " +
                             std::to_string(j + 1) + ": non-finite value");
      }
    }
    if (dim == 0) {
      dim = row.size();
    } else if (row.size() != dim) {
      throw DimensionError("line " + std::to_string(line_no) + ": expected " +
                           std::to_string(dim) + " columns, found " +
                           std::to_string(row.size()));
    }
    data.emplace_back(data.size(), std::move(row));
  }
  if (in.bad()) {
    throw IoError("read failure on '" + path + "'");
  }
  return data;
}

}  // namespace submax

#endif  // SUBMAX_HARNESS_CSV_HPP
