#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace reldp {

/// Base for every error the library raises.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Relational contract violation: unknown column, name clash, domain or
/// type mismatch. Raised by the table engine and by the DP driver when a
/// bundle produces a schema the pipeline did not expect.
class SchemaError : public Error {
 public:
  using Error::Error;
};

/// Malformed input file.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line)
      : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what), line_(line) {}
  explicit ParseError(const std::string& what) : ParseError(what, 0) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// A tree decomposition that does not decompose the graph it is used with.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// A table exceeded the configured row cap.
class CapacityError : public Error {
 public:
  using Error::Error;
};

/// Brute-force oracle refused an instance above its size guard.
class OracleLimitError : public Error {
 public:
  using Error::Error;
};

}  // namespace reldp
