#pragma once

#include <stdexcept>
#include <string>

namespace pointpat {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct EmptyPattern : Error {
  using Error::Error;
};
struct DegenerateSpan : Error {
  using Error::Error;
};
struct OutOfSpan : Error {
  using Error::Error;
};
struct OutOfWindow : Error {
  using Error::Error;
};
struct BadNorm : Error {
  using Error::Error;
};
struct ThinningBound : Error {
  using Error::Error;
};
struct NoParents : Error {
  using Error::Error;
};
struct PackingFailure : Error {
  using Error::Error;
};
struct ShapeExceedsWindow : Error {
  using Error::Error;
};
struct RangeTooLarge : Error {
  using Error::Error;
};
struct NegativeK : Error {
  using Error::Error;
};
struct GridTooShort : Error {
  using Error::Error;
};
struct InsufficientSims : Error {
  using Error::Error;
};
struct FitDiverged : Error {
  using Error::Error;
};
struct DegenerateX : Error {
  using Error::Error;
};
struct ParseError : Error {
  using Error::Error;
};
struct ConfigError : Error {
  using Error::Error;
};

}  // namespace pointpat
