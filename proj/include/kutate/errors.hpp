#pragma once

#include <stdexcept>
#include <string>

namespace kutate {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Series expansion requested in a direction where the denominator's extreme
// coefficient is not a unit, so degreewise long division over the integers
// does not terminate.
class NonUnitLeadingTerm : public Error {
  public:
    using Error::Error;
};

// A smash-product pair for which no table row exists.
class UnsupportedPair : public Error {
  public:
    using Error::Error;
};

// A module symbol the resolution oracle cannot present.
class UnsupportedSymbol : public Error {
  public:
    using Error::Error;
};

// The requested window cannot honor the oracle's truncation safety margin.
class WindowTooWide : public Error {
  public:
    using Error::Error;
};

class InvalidPrime : public Error {
  public:
    using Error::Error;
};

class IndexOutOfRange : public Error {
  public:
    using Error::Error;
};

}  // namespace kutate
