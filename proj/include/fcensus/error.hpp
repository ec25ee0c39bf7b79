#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace fcensus {

enum class Errc {
  kNonPrime,
  kFieldTooLarge,
  kDivisionByZero,
  kMixedFields,
  kNoEmbedding,
  kSizeMismatch,
  kAmbientMismatch,
  kNotSemisimple,
  kTooManyVertices,
  kNotBalanced,
  kDuplicateEigenvalues,
  kNotNilpotent,
  kOutOfRange,
  kNotAPowerOfP,
  kWrongPartCount,
  kNotAPartition,
  kNonIntegerResult,
  kWorkCapExceeded,
  kInsufficientData,
  kZeroCount,
  kWrongSize,
  kDegenerateV,
};

std::string_view errc_name(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace fcensus
