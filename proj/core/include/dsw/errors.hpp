#pragma once

#include <stdexcept>
#include <string>

namespace dsw {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Inconsistent or unsupported configuration (bad grid, operator/variant mismatch, ...).
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// Array lengths that do not agree.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// Input outside the domain of a model (dry cells, non-positive depth, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// NaN/Inf encountered during evaluation.
class NumericError : public Error {
 public:
  using Error::Error;
};

/// Matrix is singular to working precision.
class FactorizationError : public Error {
 public:
  FactorizationError(const std::string& what, double pivot) : Error(what), pivot_(pivot) {}
  double pivot() const noexcept { return pivot_; }

 private:
  double pivot_;
};

/// Malformed external data file.
class IngestionError : public Error {
 public:
  IngestionError(const std::string& what, std::size_t line) : Error(what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace dsw
