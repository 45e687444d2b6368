#pragma once

#include <stdexcept>
#include <string>

namespace dmt {

/// Base class of every library error. Domain failures derive from this directly;
/// I/O and parse failures derive from IoError so front ends can tell them apart.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

class ParseError : public IoError {
 public:
  using IoError::IoError;
};

class MalformedFacet : public Error {
 public:
  using Error::Error;
};

class DomainError : public Error {
 public:
  using Error::Error;
};

class UnknownSimplex : public Error {
 public:
  using Error::Error;
};

class UnknownLabel : public Error {
 public:
  using Error::Error;
};

/// An operation was called on a field that is not a valid gradient vector field.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

class InvalidField : public Error {
 public:
  using Error::Error;
};

class TrajectoryOverflow : public Error {
 public:
  using Error::Error;
};

class NotCancellable : public Error {
 public:
  using Error::Error;
};

class InvalidPair : public Error {
 public:
  using Error::Error;
};

class SequencingError : public Error {
 public:
  using Error::Error;
};

class ChainLawError : public Error {
 public:
  using Error::Error;
};

}  // namespace dmt
