#pragma once

#include <stdexcept>
#include <string>

namespace bstopo {

// Input data that cannot describe a valid object (duplicate vertex in a
// simplex, non-symmetric matrix, non-integral copy count, ...).
class MalformedInput : public std::invalid_argument {
 public:
  explicit MalformedInput(const std::string& what) : std::invalid_argument(what) {}
};

// A caller broke an operation's precondition (radius mismatch, cap exceeded).
class ContractError : public std::logic_error {
 public:
  explicit ContractError(const std::string& what) : std::logic_error(what) {}
};

// Unreadable file or text that does not follow a documented format.
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace bstopo
