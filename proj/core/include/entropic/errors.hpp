#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace entropic {

enum class ErrorKind {
  InvalidInput,
  ZeroInput,
  DivisionNotExact,
  NotSymmetric,
  ZeroColumn,
  RankDeficient,
  BasicMatrix,
  IsthmusElement,
  NotAFlat,
  NotOnStratum,
  OnArrangement,
  ParallelColumns,
  DegreeDrop,
  UnsupportedN,
  KernelZeroCoordinate,
  NotCorankOne,
  OnDiscriminant,
  NotPositiveDefinite,
  DegenerateRHS,
  TooLarge,
  NewtonDivergence,
  SelfLoop,
  DuplicateEdge,
};

std::string_view to_string(ErrorKind kind);

// Every failure raised by the library carries a kind so callers (the CLI in
// particular) can map it onto an exit code without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message);

  ErrorKind kind() const noexcept { return kind_; }

  // Newton failures are numeric; everything else is a domain error.
  bool is_numeric() const noexcept { return kind_ == ErrorKind::NewtonDivergence; }

 private:
  ErrorKind kind_;
};

[[noreturn]] void raise(ErrorKind kind, const std::string& message);

}  // namespace entropic
