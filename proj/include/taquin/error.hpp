#pragma once

#include <stdexcept>
#include <string>

namespace taquin {

// Base for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A value is malformed: an entry outside its shape, a duplicate entry,
// rows of the wrong length.
class StructuralError : public Error {
 public:
  using Error::Error;
};

// A well-formed value violates an operation's precondition.
class DomainError : public Error {
 public:
  using Error::Error;
};

// A brute-force routine was asked to exceed its configured bound.
class ResourceError : public Error {
 public:
  using Error::Error;
};

// The occupied cells of a mesh state do not form a (skew) shape.
class InvalidStateError : public Error {
 public:
  using Error::Error;
};

// Serialized input could not be decoded.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace taquin
