#include "opdr/error.hpp"

namespace opdr {

std::string_view module_of(Errc code) noexcept {
  switch (code) {
    case Errc::MalformedHeader:
    case Errc::InconsistentRowWidth:
    case Errc::NonFiniteValue:
    case Errc::MalformedValue:
    case Errc::EmptyFile:
    case Errc::IoRead:
    case Errc::IoWrite:
    case Errc::InvalidVectorSet:
      return "core";
    case Errc::DimensionMismatch:
    case Errc::ZeroNormVector:
      return "metrics";
    case Errc::KTooLarge:
      return "knn";
    case Errc::OverlappingSubsets:
    case Errc::TableMismatch:
    case Errc::InvalidContext:
      return "opm";
    case Errc::TargetDimTooLarge:
      return "reduce";
    case Errc::InsufficientSamples:
    case Errc::DegenerateDesign:
    case Errc::NonPositiveSlope:
      return "fit";
    case Errc::DatasetTooSmall:
    case Errc::EmptyInput:
    case Errc::InvalidConfig:
      return "harness";
  }
  return "opdr";
}

std::string_view name_of(Errc code) noexcept {
  switch (code) {
    case Errc::MalformedHeader: return "MalformedHeader";
    case Errc::InconsistentRowWidth: return "InconsistentRowWidth";
    case Errc::NonFiniteValue: return "NonFiniteValue";
    case Errc::MalformedValue: return "MalformedValue";
    case Errc::EmptyFile: return "EmptyFile";
    case Errc::IoRead: return "IoRead";
    case Errc::IoWrite: return "IoWrite";
    case Errc::InvalidVectorSet: return "InvalidVectorSet";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::ZeroNormVector: return "ZeroNormVector";
    case Errc::KTooLarge: return "KTooLarge";
    case Errc::OverlappingSubsets: return "OverlappingSubsets";
    case Errc::TableMismatch: return "TableMismatch";
    case Errc::InvalidContext: return "InvalidContext";
    case Errc::TargetDimTooLarge: return "TargetDimTooLarge";
    case Errc::InsufficientSamples: return "InsufficientSamples";
    case Errc::DegenerateDesign: return "DegenerateDesign";
    case Errc::NonPositiveSlope: return "NonPositiveSlope";
    case Errc::DatasetTooSmall: return "DatasetTooSmall";
    case Errc::EmptyInput: return "EmptyInput";
    case Errc::InvalidConfig: return "InvalidConfig";
  }
  return "Unknown";
}

}  // namespace opdr
