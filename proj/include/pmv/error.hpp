#pragma once

#include <stdexcept>
#include <string>

namespace pmv {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Elements from one algebra (or group) handed to another.
class BackendMismatch : public Error {
 public:
  using Error::Error;
};

/// The operation is not available for this backend (e.g. skeleton of an infinite carrier).
class Unsupported : public Error {
 public:
  using Error::Error;
};

/// A precondition on the arguments was violated.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A size or depth ceiling was exceeded.
class CeilingExceeded : public Error {
 public:
  using Error::Error;
};

/// Malformed DSL text or JSON input.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// A structure failed validation against the pseudo MV-algebra axioms.
class AxiomFailure : public Error {
 public:
  using Error::Error;
};

}  // namespace pmv
