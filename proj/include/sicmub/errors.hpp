#pragma once

#include <stdexcept>
#include <string>

namespace sicmub {

/// Root of every error raised by the library.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Operand shapes or dimensions do not agree.
class DimensionError : public Error {
  public:
    using Error::Error;
};

/// A scalar argument lies outside the range where the operation is defined.
class DomainError : public Error {
  public:
    using Error::Error;
};

/// No construction is available for the requested Hilbert-space dimension.
class UnsupportedDimensionError : public Error {
  public:
    using Error::Error;
};

/// A Weyl-Heisenberg orbit failed the SIC overlap or completeness test.
class NotASicError : public Error {
  public:
    NotASicError(const std::string &what, double worst_deviation)
        : Error(what), worst_deviation_(worst_deviation) {}
    [[nodiscard]] double worst_deviation() const noexcept {
        return worst_deviation_;
    }

  private:
    double worst_deviation_;
};

/// A derived object (basis, POVM) failed its post-construction check.
class ConstructionError : public Error {
  public:
    using Error::Error;
};

/// An input violates a documented precondition of the operation.
class PreconditionError : public Error {
  public:
    using Error::Error;
};

/// A matrix is not a valid density operator.
class InvalidStateError : public Error {
  public:
    using Error::Error;
};

/// A file could not be read, parsed or written.
class IoError : public Error {
  public:
    using Error::Error;
};

} // namespace sicmub
