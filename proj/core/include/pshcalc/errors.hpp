#pragma once

#include <stdexcept>
#include <string>

namespace pshcalc {

// Base for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Two objects living over different weights were combined.
class WeightMismatch : public Error {
 public:
  using Error::Error;
};

// Malformed partition text, JSON document or CSV input.
class ParseError : public Error {
 public:
  using Error::Error;
};

// A configured resource guard (max_n, brute-force cell limit) refused the call.
class GuardExceeded : public Error {
 public:
  using Error::Error;
};

// Arguments tagged with incompatible bases, sides or matrix kinds.
class TagMismatch : public Error {
 public:
  using Error::Error;
};

// A matrix that should be unitriangular is not.
class NotUnitriangular : public Error {
 public:
  using Error::Error;
};

// The vector has no unique dominance-maximal support element.
class WavefrontError : public Error {
 public:
  using Error::Error;
};

}  // namespace pshcalc
