#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace nichols {

/// Raised when an exact inverse of zero is requested.
class DivisionByZero : public std::domain_error {
public:
  DivisionByZero() : std::domain_error("division by zero") {}
};

/// Malformed textual input (scalar literals, session files).
class ParseError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Input that parses but violates an algebraic axiom.
class ValidationError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A computation hit its configured cutoff before the answer was decided.
class UndecidedError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A resource bound (word count, vertex count) was exceeded.
class ResourceLimitError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Outcome of an exhaustive check; `violations` lists witnesses in discovery order.
struct ValidationReport {
  bool passed = true;
  std::vector<std::string> violations;

  void fail(std::string what) {
    passed = false;
    violations.push_back(std::move(what));
  }
};

}  // namespace nichols
