#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace tvar {

// Raised when an operation's mathematical precondition fails.  The kind string
// is machine-readable and doubles as the "kind" field of CLI error output, so
// its spelling is part of the output contract.
class DomainError : public std::runtime_error {
public:
  DomainError(std::string kind, std::string detail)
      : std::runtime_error(kind + ": " + detail),
        kind_(std::move(kind)),
        detail_(std::move(detail)) {}

  const std::string& kind() const { return kind_; }
  const std::string& detail() const { return detail_; }

private:
  std::string kind_;
  std::string detail_;
};

// Raised on malformed input documents.  pointer is a JSON-pointer-style path
// to the offending element ("" when the problem is not element-local).
class ParseError : public std::runtime_error {
public:
  ParseError(std::string detail, std::string pointer = "")
      : std::runtime_error(pointer.empty() ? detail : detail + " (at " + pointer + ")"),
        detail_(std::move(detail)),
        pointer_(std::move(pointer)) {}

  const std::string& detail() const { return detail_; }
  const std::string& pointer() const { return pointer_; }

private:
  std::string detail_;
  std::string pointer_;
};

}  // namespace tvar
