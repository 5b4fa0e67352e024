#pragma once

#include <stdexcept>
#include <string>

namespace qdecay {

class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Raised near k = 0 or kappa = 0 where the coefficient closed forms have
// removable 1/(kappa k) factors and evaluation would amplify rounding noise.
class DegeneratePointError : public Error {
public:
  using Error::Error;
};

// Root refinement or quadrature failed to converge.
class ConvergenceError : public Error {
public:
  using Error::Error;
};

// Argument outside the validated range of a series or expansion.
class RangeError : public Error {
public:
  using Error::Error;
};

// Configuration parse or validation failure. `line` is 0 when the failure
// is not tied to a specific line.
class ConfigError : public Error {
public:
  ConfigError(const std::string& msg, int line = 0)
      : Error(line > 0 ? "line " + std::to_string(line) + ": " + msg : msg),
        line_(line) {}
  int line() const { return line_; }

private:
  int line_ = 0;
};

} // namespace qdecay
