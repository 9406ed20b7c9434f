#pragma once

#include <stdexcept>
#include <string>

namespace lie3 {

// Incompatible ranks/dims/slots.
struct ShapeError : std::runtime_error {
  explicit ShapeError(const std::string& msg) : std::runtime_error(msg) {}
};

// A mathematical precondition failed (e.g. map is not an involutive
// derivation, product fails the pre-Lie axioms).
struct DomainError : std::runtime_error {
  explicit DomainError(const std::string& msg) : std::runtime_error(msg) {}
};

// Enumeration bound exceeded.
struct CapacityError : std::runtime_error {
  explicit CapacityError(const std::string& msg) : std::runtime_error(msg) {}
};

// Unknown catalog case.
struct LookupError : std::runtime_error {
  explicit LookupError(const std::string& msg) : std::runtime_error(msg) {}
};

// Illegal catalog parameters.
struct ParamError : std::runtime_error {
  explicit ParamError(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed input text; line is 1-based, 0 when unknown.
struct ParseError : std::runtime_error {
  ParseError(int line, const std::string& msg)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + msg : msg), line(line) {}
  int line;
};

}  // namespace lie3
