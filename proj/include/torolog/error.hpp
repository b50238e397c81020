#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace torolog {

enum class ErrorCode {
  DimensionMismatch,
  ZeroVector,
  NotAFace,
  NotInMonoid,
  RelationViolated,
  InvalidFan,
  NotAMorphism,
  InvalidComplex,
  MissingMultiplicities,
  InvalidInput,
};

std::string_view to_string(ErrorCode code);

/// Base exception for every failed precondition in the library.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace torolog
