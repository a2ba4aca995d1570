#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace opdr {

enum class Errc {
  // core
  MalformedHeader,
  InconsistentRowWidth,
  NonFiniteValue,
  MalformedValue,
  EmptyFile,
  IoRead,
  IoWrite,
  InvalidVectorSet,
  // metrics
  DimensionMismatch,
  ZeroNormVector,
  // knn
  KTooLarge,
  // opm
  OverlappingSubsets,
  TableMismatch,
  InvalidContext,
  // reduce
  TargetDimTooLarge,
  // fit
  InsufficientSamples,
  DegenerateDesign,
  NonPositiveSlope,
  // harness
  DatasetTooSmall,
  EmptyInput,
  InvalidConfig,
};

/// Name of the module that owns an error code, used to qualify messages.
std::string_view module_of(Errc code) noexcept;
std::string_view name_of(Errc code) noexcept;

class Error : public std::runtime_error {
public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(module_of(code)) + ": " + std::string(name_of(code)) + ": " + what),
        code_(code) {}

  Errc code() const noexcept { return code_; }

private:
  Errc code_;
};

}  // namespace opdr
