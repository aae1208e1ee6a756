#pragma once

#include <stdexcept>
#include <string>

namespace seqeffect {

enum class ErrorCode {
  NotHermitian,
  NoConvergence,
  DomainError,
  NotPSD,
  ShapeMismatch,
  SpectrumOutOfRange,
  NotProjection,
  NotUnitVector,
  FamilyDomainError,
  NotCommuting,
  NotDim2,
  InvalidSpec,
  ParseError,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace seqeffect
