#pragma once

#include <stdexcept>
#include <string>

namespace thrackle {

/// Base class for all errors raised by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Two points that are coincident or antipodal, so no unique great circle
/// passes through them.
struct DegeneratePairError : Error {
  using Error::Error;
};

/// An arc length indistinguishable from pi cannot be classified short or long.
struct ExactlyPiError : Error {
  using Error::Error;
};

struct NotATreeError : Error {
  using Error::Error;
};

struct NotACaterpillarError : Error {
  using Error::Error;
};

struct NotIncidentError : Error {
  using Error::Error;
};

struct DegreeTooLowError : Error {
  using Error::Error;
};

struct NotAPathAtVertexError : Error {
  using Error::Error;
};

struct NotAThrackleError : Error {
  using Error::Error;
};

struct EvenCycleLengthError : Error {
  using Error::Error;
};

struct ParamsViolateInequalitiesError : Error {
  using Error::Error;
};

struct InvalidDrawingError : Error {
  using Error::Error;
};

/// Malformed input text. `line` is 1-based when known, 0 otherwise; `field`
/// names the offending JSON field when known.
struct ParseError : Error {
  int line = 0;
  std::string field;

  explicit ParseError(const std::string& what, int line_ = 0, std::string field_ = {})
      : Error(what), line(line_), field(std::move(field_)) {}
};

}  // namespace thrackle
