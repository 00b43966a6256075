#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace memfir {

// Input file could not be parsed. line() is 1-based, 0 when unknown.
class ParseError : public std::runtime_error {
public:
  explicit ParseError(const std::string& msg, std::size_t line = 0)
      : std::runtime_error(line ? msg + " (line " + std::to_string(line) + ")" : msg),
        line_(line) {}

  std::size_t line() const { return line_; }

private:
  std::size_t line_;
};

// No resistor assignment can satisfy the range constraints.
class InfeasibleError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Scaled input would exceed the memristor dead-zone voltage.
class DeadZoneError : public std::runtime_error {
public:
  DeadZoneError(const std::string& msg, double required_scale)
      : std::runtime_error(msg), required_scale_(required_scale) {}

  // Largest scaling gain that would keep the input inside the dead-zone.
  double required_scale() const { return required_scale_; }

private:
  double required_scale_;
};

}  // namespace memfir
