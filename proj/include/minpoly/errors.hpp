#pragma once

#include <stdexcept>
#include <string>

namespace minpoly {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands come from fields with different moduli.
class ModulusMismatch : public Error {
 public:
  using Error::Error;
};

/// Polynomials live in different rings (different p or variable count).
class RingMismatch : public Error {
 public:
  using Error::Error;
};

/// A dense table of the requested size would exceed the configured limit.
class SizeLimitExceeded : public Error {
 public:
  using Error::Error;
};

/// Precondition violated: bad index, zero inverse, unsupported parameters.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Malformed JSON document or schema violation.
class FormatError : public Error {
 public:
  using Error::Error;
};

}  // namespace minpoly
