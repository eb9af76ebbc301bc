#pragma once

#include <stdexcept>
#include <string>

namespace twystoff {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

/// Heavy-handed rules only exist for positions of at most three stacks.
class HeavyHandedUndefined : public Error {
 public:
  using Error::Error;
};

class IllegalMove : public Error {
 public:
  using Error::Error;
};

class NoMoves : public Error {
 public:
  using Error::Error;
};

/// A search exceeded a bound that a theorem guarantees. Always a bug or a
/// counterexample, never a tuning problem.
class BoundViolation : public Error {
 public:
  using Error::Error;
};

class SearchCapExceeded : public Error {
 public:
  using Error::Error;
};

class CapExceeded : public Error {
 public:
  using Error::Error;
};

class ClaimFailed : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

class FormatError : public Error {
 public:
  using Error::Error;
};

}  // namespace twystoff
