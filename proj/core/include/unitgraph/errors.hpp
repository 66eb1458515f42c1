#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace unitgraph {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A descriptor, argument, or construction input violates its contract.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// A configured size or time cap was exceeded.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

/// The requested closed form does not cover this ring.
class Unsupported : public Error {
 public:
  using Error::Error;
};

/// Arithmetic produced something impossible in a finite ring.
class InternalInconsistency : public Error {
 public:
  using Error::Error;
};

/// Ring-expression syntax or semantic error, with a 0-based character offset.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : Error(message + " (at offset " + std::to_string(position) + ")"),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace unitgraph
