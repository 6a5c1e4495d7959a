#include "kirbycalc/error.hpp"

namespace kirby {

const char* to_string(Errc code) {
  switch (code) {
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::AsymmetricMatrix: return "AsymmetricMatrix";
    case Errc::NonzeroDiagonal: return "NonzeroDiagonal";
    case Errc::NonNormalizableSlope: return "NonNormalizableSlope";
    case Errc::NonIntegral: return "NonIntegral";
    case Errc::Meridional: return "Meridional";
    case Errc::NotMeridional: return "NotMeridional";
    case Errc::NotUnknot: return "NotUnknot";
    case Errc::FramingNotUnit: return "FramingNotUnit";
    case Errc::UnknownId: return "UnknownId";
    case Errc::SelfSlide: return "SelfSlide";
    case Errc::EvenP: return "EvenP";
    case Errc::NotCoprime: return "NotCoprime";
    case Errc::DegenerateQ: return "DegenerateQ";
    case Errc::ZeroDenominator: return "ZeroDenominator";
    case Errc::NonSquare: return "NonSquare";
    case Errc::NonSymmetric: return "NonSymmetric";
    case Errc::AlreadyIntegral: return "AlreadyIntegral";
    case Errc::EmptyJustification: return "EmptyJustification";
    case Errc::InvalidParams: return "InvalidParams";
    case Errc::ParseError: return "ParseError";
    case Errc::Overflow: return "Overflow";
  }
  return "UnknownError";
}

void fail(Errc code, const std::string& detail) {
  std::string what = to_string(code);
  if (!detail.empty()) {
    what += ": ";
    what += detail;
  }
  throw Error(code, what);
}

}  // namespace kirby
