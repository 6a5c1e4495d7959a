#pragma once

#include <stdexcept>
#include <string>

namespace kirby {

// Reason codes shared by thrown errors and verification-report failures.
enum class Errc {
  DimensionMismatch,
  AsymmetricMatrix,
  NonzeroDiagonal,
  NonNormalizableSlope,
  NonIntegral,
  Meridional,
  NotMeridional,
  NotUnknot,
  FramingNotUnit,
  UnknownId,
  SelfSlide,
  EvenP,
  NotCoprime,
  DegenerateQ,
  ZeroDenominator,
  NonSquare,
  NonSymmetric,
  AlreadyIntegral,
  EmptyJustification,
  InvalidParams,
  ParseError,
  Overflow,
};

const char* to_string(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] void fail(Errc code, const std::string& detail = "");

}  // namespace kirby
