#ifndef LANDAU_ERRORS_HPP
#define LANDAU_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace landau {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Physical or numerical parameter outside its admissible range.
class ParameterError : public Error {
 public:
  using Error::Error;
};

/// Inconsistent run or basis configuration.
class ConfigurationError : public Error {
 public:
  using Error::Error;
};

/// Array dimensions do not match.
class ShapeError : public Error {
 public:
  using Error::Error;
};

/// Random-parameter value outside the distribution support.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Non-finite state produced during time stepping.
class NumericalError : public Error {
 public:
  using Error::Error;
};

/// Malformed configuration text; carries the offending line (1-based, 0 if none).
class ParseError : public Error {
 public:
  ParseError(int line, const std::string& what)
      : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

}  // namespace landau

#endif  // LANDAU_ERRORS_HPP
