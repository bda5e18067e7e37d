#pragma once

#include <stdexcept>
#include <string>

namespace chiral {

/// Raised when a molecule's link topology is inconsistent (dangling link,
/// non-consecutive chain, missing back-link, attachment onto a link slot).
class StructureError : public std::runtime_error {
 public:
  explicit StructureError(const std::string& what) : std::runtime_error(what) {}
};

/// Raised when an operation needs data the value does not carry
/// (e.g. sum_vector on a tetrahedron without bond geometry).
class StateError : public std::logic_error {
 public:
  explicit StateError(const std::string& what) : std::logic_error(what) {}
};

/// Raised by the molecule-file parser; carries a 1-based line number.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line) {}
  int line() const noexcept { return line_; }

 private:
  int line_;
};

}  // namespace chiral
