#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace shoda {

enum class ErrorKind {
  InvalidArgument,
  ShapeMismatch,
  NumericalFailure,
  NoSuchSpectralValue,
  ContourTooTight,
  NotRankOne,
  DependentInputs,
  ZeroElement,
  DifferentMinimalIdeal,
  NotAProjection,
  PathDegenerate,
  NotShodaComplete,
  RankMismatch,
  IllConditioned,
  NotAnIdeal,
  NotSemisimple,
  NonSquareComponent,
  NotTraceless,
  ParseError,
  IoError,
  InternalError,
};

std::string_view error_name(ErrorKind kind) noexcept;

/// Every failure raised by the library carries one of the kinds above so that
/// the C API and the CLI can map it onto a status code.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& detail)
      : std::runtime_error(detail), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& detail) {
  throw Error(kind, detail);
}

}  // namespace shoda
