#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace boolift {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed function or gadget spec. `position` is a 0-based offset into the
/// text that failed to parse.
class SpecError : public Error {
 public:
  SpecError(const std::string& msg, std::size_t position)
      : Error(msg + " (at position " + std::to_string(position) + ")"),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// An operation's input contract was violated (partial where total is
/// required, non-symmetric input, out-of-range parameter, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A configurable work or memory cap would be exceeded.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

/// Evaluation of a partial function outside its domain.
class UndefinedInput : public Error {
 public:
  using Error::Error;
};

/// Symmetric NAADT plan requested with switch(f) >= n/2; the caller should
/// fall back to querying every variable.
class NoSmallPlan : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

}  // namespace boolift
