#pragma once

#include <stdexcept>
#include <string>

namespace prodrange {

// Base class for everything thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// Input matrix fails the relative Hermiticity tolerance.
class NotHermitian : public Error {
 public:
  using Error::Error;
};

// Iterative solver exceeded its sweep cap.
class NoConvergence : public Error {
 public:
  using Error::Error;
};

class BadFactorIndex : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class NotUnitary : public Error {
 public:
  using Error::Error;
};

class NotProductDiagonal : public Error {
 public:
  using Error::Error;
};

class ValueOutsideRange : public Error {
 public:
  using Error::Error;
};

class AttainFailure : public Error {
 public:
  using Error::Error;
};

// Membership query against a zero-area boundary for a point off the segment.
class DegenerateBoundary : public Error {
 public:
  using Error::Error;
};

// Region contains the origin; no log-polar representation exists.
class ContainsZero : public Error {
 public:
  using Error::Error;
};

class AngleOverflow : public Error {
 public:
  using Error::Error;
};

class EmptyMask : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& path, const std::string& detail)
      : Error(path + ": " + detail), path(path), detail(detail) {}
  std::string path;
  std::string detail;
};

}  // namespace prodrange
