#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace stk {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NotAUnit : Error {
  using Error::Error;
};

struct CongruenceViolation : Error {
  using Error::Error;
};

struct MixedSpecs : Error {
  MixedSpecs() : Error("operands belong to different ring specs") {}
};

struct NoSuchRoot : Error {
  using Error::Error;
};

struct CosetLimitExceeded : Error {
  using Error::Error;
};

struct ConfigError : Error {
  using Error::Error;
};

struct NonHomogeneous : Error {
  using Error::Error;
};

struct DenominatorObstruction : Error {
  using Error::Error;
};

struct CoefficientOverflow : Error {
  CoefficientOverflow() : Error("integer coefficient overflow") {}
};

// two words expected to share an image do not
struct ImageMismatch : Error {
  using Error::Error;
};

// begin/end are byte offsets into the parsed text
struct ParseError : Error {
  ParseError(const std::string& msg, std::size_t b, std::size_t e)
      : Error(msg + " at " + std::to_string(b) + ".." + std::to_string(e)),
        begin(b),
        end(e) {}
  std::size_t begin;
  std::size_t end;
};

}  // namespace stk
