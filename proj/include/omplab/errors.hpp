#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace omplab {

/// Raised when a structure violates one of its construction invariants.
class StructureError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Raised on malformed text input. `line` is 1-based, `offset` is 0-based.
class ParseError : public std::runtime_error {
public:
  ParseError(const std::string& what, std::size_t line, std::size_t offset)
      : std::runtime_error(what), line_(line), offset_(offset) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t offset() const noexcept { return offset_; }

private:
  std::size_t line_;
  std::size_t offset_;
};

/// A caller broke an operation's precondition (empty set, unassigned variable, ...).
class ContractError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// A check that the theory guarantees has failed; indicates a bug in a checker.
class InternalError : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

} // namespace omplab
