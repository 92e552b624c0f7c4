#ifndef SUBMAX_ERRORS_HPP
#define SUBMAX_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace submax {

// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Pushing into a summary that already holds K items.
class CapacityError : public Error {
 public:
  explicit CapacityError(const std::string& what) : Error(what) {}
};

// An ordinal appears twice in one summary.
class DuplicateOrdinalError : public Error {
 public:
  explicit DuplicateOrdinalError(const std::string& what) : Error(what) {}
};

// Feature vectors of unequal length where equal length is required.
class DimensionError : public Error {
 public:
  explicit DimensionError(const std::string& what) : Error(what) {}
};

// Invalid parameter or invalid flag/field combination.
class ConfigError : public Error {
 public:
  explicit ConfigError(const std::string& what) : Error(what) {}
};

// File could not be opened, read or written.
class IoError : public Error {
 public:
  explicit IoError(const std::string& what) : Error(what) {}
};

// Malformed cell in an input file; carries the 1-based row and column.
class ParseError : public Error {
 public:
  ParseError(std::size_t row, std::size_t column, const std::string& what)
      : Error(what), row_(row), column_(column) {}

  std::size_t row() const { return row_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t row_;
  std::size_t column_;
};

// Exhaustive search was asked for more subsets than the guard allows.
class InstanceTooLargeError : public Error {
 public:
  explicit InstanceTooLargeError(const std::string& what) : Error(what) {}
};

}  // namespace submax

#endif  // SUBMAX_ERRORS_HPP
