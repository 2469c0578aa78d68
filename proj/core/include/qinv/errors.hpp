#pragma once

#include <stdexcept>
#include <string>

namespace qinv {

// Root of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed textual or JSON input.
class ParseError : public Error {
 public:
  using Error::Error;
};

// Index, label or generator outside its admissible range.
class RangeError : public Error {
 public:
  using Error::Error;
};

// Polynomials over different formal variables were combined.
class TagError : public Error {
 public:
  using Error::Error;
};

// An odd exponent reached an even-only reindexing.
class ParityError : public Error {
 public:
  using Error::Error;
};

// Structurally invalid diagram (labels, arities, empty input where forbidden).
class ValidityError : public Error {
 public:
  using Error::Error;
};

// No consistent orientation exists for a planar diagram.
class OrientationError : public Error {
 public:
  using Error::Error;
};

// Cobordism layers or glued pieces do not match up.
class CompositionError : public Error {
 public:
  using Error::Error;
};

// A floating-point result failed its integrality check.
class NumericError : public Error {
 public:
  using Error::Error;
};

// Operands live on phase spaces of different dimension.
class DimensionError : public Error {
 public:
  using Error::Error;
};

}  // namespace qinv
