#ifndef CURLED2_ERRORS_HPP
#define CURLED2_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace curled2 {

/// Base class of everything this library throws on purpose.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed text input: field names, element literals, matrix literals.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Misuse of an operation: mixed field specs, division by zero,
/// enumeration of an infinite field, method not applicable.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// The operation is defined but not for this base field
/// (classification-layer operations reject F2; searches reject Q).
class UnsupportedFieldError : public Error {
 public:
  using Error::Error;
};

/// Input is outside the classified domain (not endo-commutative, not curled).
class PredicateError : public Error {
 public:
  using Error::Error;
};

}  // namespace curled2

#endif
