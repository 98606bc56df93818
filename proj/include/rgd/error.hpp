#pragma once

#include <stdexcept>
#include <string>

namespace rgd {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Caller passed arguments outside an operation's domain.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Malformed input text (graph6, block files, cache files).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// An internal consistency check failed; indicates a bug or a corrupted input.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace rgd
