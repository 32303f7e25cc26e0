#ifndef SETPAT_ERRORS_HPP
#define SETPAT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace setpat {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// An argument lies outside the domain of an operation (index out of range,
/// a value that is not a permutation, a non-matchstick partition, ...).
class DomainError : public Error {
public:
  using Error::Error;
};

/// A word violates the restricted growth condition.
class FormatError : public Error {
public:
  using Error::Error;
};

/// Text input could not be parsed into a structure.
class ParseError : public Error {
public:
  using Error::Error;
};

/// A subset offered as a containment witness does not certify one.
class InvalidWitness : public Error {
public:
  using Error::Error;
};

/// An exhaustive job was refused because it exceeds the configured bound.
class BoundExceeded : public Error {
public:
  using Error::Error;
};

/// A long-running search observed a stop request.
class Cancelled : public Error {
public:
  Cancelled() : Error("operation cancelled") {}
};

} // namespace setpat

#endif
