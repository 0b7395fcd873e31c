#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace heyting {

enum class ErrorKind {
  NotALattice,
  NotResiduated,
  NotAPartialOrder,
  SizeLimit,
  NoSuchAlgebra,
  NotSI,
  NotGenerated,
  SyntaxError,
  UnboundVariable,
  NotAssertoric,
  VariableClash,
  BadAnchor,
  TruncationTooSmall,
  NotS4,
  InvalidInput,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

// Raised by the formula parser; offset is a 0-based byte position.
class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t offset, const std::string& what)
      : Error(ErrorKind::SyntaxError, what + " at offset " + std::to_string(offset)),
        offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

}  // namespace heyting
