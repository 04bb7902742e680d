#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace toricmg {

enum class ErrorCode {
  DuplicateEdge,
  LoopEdge,
  VertexOutOfRange,
  CycleBudgetExceeded,
  WalkBudgetExceeded,
  FiberBudgetExceeded,
  FanBudgetExceeded,
  NotAWalk,
  OddWalk,
  BadParameters,
  GlueElementMissing,
  DimensionMismatch,
  ZeroBinomial,
  NotReduced,
  NotAFacet,
  NotHomogeneous,
  NotBipartite,
  NotInIdeal,
  ExponentOverflow,
  ParseError,
  MalformedGraph6,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Raised when an enumeration hits its configured cap. `partial` is the number
/// of objects produced before giving up.
class BudgetExceeded : public Error {
 public:
  BudgetExceeded(ErrorCode code, std::size_t cap, std::size_t partial)
      : Error(code, "cap " + std::to_string(cap) + " reached after " +
                        std::to_string(partial) + " items"),
        cap_(cap),
        partial_(partial) {}

  std::size_t cap() const noexcept { return cap_; }
  std::size_t partial() const noexcept { return partial_; }

 private:
  std::size_t cap_;
  std::size_t partial_;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error(ErrorCode::ParseError, "line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace toricmg
