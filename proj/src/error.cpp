#include "shoda/error.hpp"

namespace shoda {

std::string_view error_name(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::ShapeMismatch: return "ShapeMismatch";
    case ErrorKind::NumericalFailure: return "NumericalFailure";
    case ErrorKind::NoSuchSpectralValue: return "NoSuchSpectralValue";
    case ErrorKind::ContourTooTight: return "ContourTooTight";
    case ErrorKind::NotRankOne: return "NotRankOne";
    case ErrorKind::DependentInputs: return "DependentInputs";
    case ErrorKind::ZeroElement: return "ZeroElement";
    case ErrorKind::DifferentMinimalIdeal: return "DifferentMinimalIdeal";
    case ErrorKind::NotAProjection: return "NotAProjection";
    case ErrorKind::PathDegenerate: return "PathDegenerate";
    case ErrorKind::NotShodaComplete: return "NotShodaComplete";
    case ErrorKind::RankMismatch: return "RankMismatch";
    case ErrorKind::IllConditioned: return "IllConditioned";
    case ErrorKind::NotAnIdeal: return "NotAnIdeal";
    case ErrorKind::NotSemisimple: return "NotSemisimple";
    case ErrorKind::NonSquareComponent: return "NonSquareComponent";
    case ErrorKind::NotTraceless: return "NotTraceless";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::IoError: return "IoError";
    case ErrorKind::InternalError: return "InternalError";
  }
  return "Unknown";
}

}  // namespace shoda
