#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace sfft {

enum class ErrorKind {
  NonInvertibleScaling,
  NonDivisorParameter,
  LengthMismatch,
  InvalidParameter,
  FilterKindMismatch,
  ZeroTonBucket,
  AmbiguousSplit,
  SingularMomentMatrix,
  NearZeroResponse,
  RankDeficient,
  ConfigMismatch,
  InvalidSpec,
  SchemaError,
};

std::string_view to_string(ErrorKind kind);

/// Exception carrying one of the library's error categories.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace sfft
