#include "normgrowth/error.hpp"

namespace normgrowth {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::NotBijective: return "NotBijective";
    case ErrorCode::NotPrimePower: return "NotPrimePower";
    case ErrorCode::NoCharacteristic: return "NoCharacteristic";
    case ErrorCode::EmptyWord: return "EmptyWord";
    case ErrorCode::NotReduced: return "NotReduced";
    case ErrorCode::DegenerateSpectrum: return "DegenerateSpectrum";
    case ErrorCode::NonIntegralDegree: return "NonIntegralDegree";
    case ErrorCode::OnlyTrivial: return "OnlyTrivial";
    case ErrorCode::EmptySubset: return "EmptySubset";
    case ErrorCode::TrivialSubset: return "TrivialSubset";
    case ErrorCode::SchemaError: return "SchemaError";
    case ErrorCode::OrthogonalityError: return "OrthogonalityError";
    case ErrorCode::NotNormal: return "NotNormal";
    case ErrorCode::NoConvergence: return "NoConvergence";
    case ErrorCode::NotLieType: return "NotLieType";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InvalidDistribution: return "InvalidDistribution";
  }
  return "Unknown";
}

}  // namespace normgrowth
