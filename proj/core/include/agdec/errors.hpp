#pragma once

#include <stdexcept>
#include <string>

namespace agdec {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An element whose digits do not fit the field it is used with.
class MalformedElement : public Error {
 public:
  using Error::Error;
};

class DivisionByZero : public Error {
 public:
  using Error::Error;
};

/// Vector or message of the wrong length.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// Curve data that fails validation, or precomputation that contradicts it.
class MalformedCode : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

/// An algebraic invariant of the decoder failed. Carries the weight s at
/// which it was detected and the name of the invariant.
class InvariantViolation : public Error {
 public:
  InvariantViolation(int s, std::string invariant, const std::string& detail)
      : Error("invariant '" + invariant + "' violated at s=" + std::to_string(s) +
              (detail.empty() ? std::string{} : ": " + detail)),
        s_(s),
        invariant_(std::move(invariant)) {}

  int s() const noexcept { return s_; }
  const std::string& invariant() const noexcept { return invariant_; }

 private:
  int s_;
  std::string invariant_;
};

}  // namespace agdec
