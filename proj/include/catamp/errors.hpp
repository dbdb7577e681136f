#pragma once

#include <stdexcept>
#include <string>

namespace catamp {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// odd cat with zero amplitude is the zero vector
struct DegenerateCat : Error {
  using Error::Error;
};
struct DomainError : Error {
  using Error::Error;
};
struct OrderTooHigh : Error {
  using Error::Error;
};
struct DimTooSmall : Error {
  using Error::Error;
};
struct StepSizeError : Error {
  using Error::Error;
};
struct UnknownFigure : Error {
  using Error::Error;
};

struct ConfigError : Error {
  std::string field;
  ConfigError(std::string f, const std::string& msg)
      : Error(f.empty() ? msg : f + ": " + msg), field(std::move(f)) {}
};

}  // namespace catamp
