#pragma once

#include <stdexcept>
#include <string>

namespace ramsey {

// Base class for everything this library throws on purpose.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class SelfLoopError : public Error {
 public:
  using Error::Error;
};

class DuplicateEdgeError : public Error {
 public:
  using Error::Error;
};

// Raised when a longest-path query would have to search a cyclic
// monochromatic component above the configured size guard.
class ComponentGuardError : public Error {
 public:
  using Error::Error;
};

// Raised when a configured vertex budget is exhausted.
class VertexBudgetError : public Error {
 public:
  using Error::Error;
};

enum class Offender { kBuilder, kPainter };

class IllegalMoveError : public Error {
 public:
  IllegalMoveError(Offender who, const std::string& what)
      : Error(what), offender_(who) {}
  Offender offender() const { return offender_; }

 private:
  Offender offender_;
};

class GameOverError : public Error {
 public:
  using Error::Error;
};

// A strategy or bookkeeping structure caught itself in an inconsistent
// state. Always an implementation bug, never a legal game outcome.
class InvariantViolationError : public Error {
 public:
  using Error::Error;
};

// A strategy exceeded one of the round bounds it is supposed to certify.
class BoundViolationError : public Error {
 public:
  using Error::Error;
};

class InfeasibleBoundError : public Error {
 public:
  using Error::Error;
};

class TranscriptFormatError : public Error {
 public:
  using Error::Error;
};

class ReplayMismatchError : public Error {
 public:
  using Error::Error;
};

}  // namespace ramsey
