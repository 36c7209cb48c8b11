#pragma once

#include <stdexcept>
#include <string>

namespace hia {

/// Base class for all errors raised by this library.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Bad definitions, malformed files, flag/precondition violations.
/// The CLI maps these to exit code 2.
class ValidationError : public Error {
public:
  explicit ValidationError(const std::string& what) : Error(what) {}
};

/// Data-dependent failures discovered mid-computation (empty slice,
/// incomparable instances, degenerate matrices). Exit code 1 in the CLI.
class DataError : public Error {
public:
  explicit DataError(const std::string& what) : Error(what) {}
};

} // namespace hia
