#pragma once

#include <stdexcept>
#include <string>

namespace vlcopt {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed configuration text.
class ParseError : public Error {
 public:
  using Error::Error;
};

// A configuration value violates a model invariant. `field()` holds the
// JSON path of the offending value, e.g. "mts[0].fov_deg".
class ValidationError : public Error {
 public:
  ValidationError(std::string field, const std::string& what)
      : Error(field + ": " + what), field_(std::move(field)) {}

  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

class GeometryError : public Error {
 public:
  using Error::Error;
};

class NoCoverageError : public Error {
 public:
  using Error::Error;
};

// Argument outside the mathematical domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

class NonConvergenceError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

class CsvError : public Error {
 public:
  using Error::Error;
};

}  // namespace vlcopt
