#ifndef TRISYM_NUMERIC_ERRORS_HPP
#define TRISYM_NUMERIC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace trisym {

/// Base of all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A caller violated a documented precondition (bad type, bad range, bad input).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Derived data contradicts itself (wrong anchor, wrong dims, catalog metadata mismatch).
class InconsistencyError : public Error {
 public:
  using Error::Error;
};

/// Something that must hold by construction did not. Always a bug or a data defect.
class IntegrityError : public Error {
 public:
  using Error::Error;
};

/// The requested computation is outside the supported scope for this input.
class Unsupported : public Error {
 public:
  using Error::Error;
};

}  // namespace trisym

#endif  // TRISYM_NUMERIC_ERRORS_HPP
