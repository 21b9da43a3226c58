#ifndef BSGAMMA_ERRORS_HPP
#define BSGAMMA_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace bsgamma {

/// Base class for every domain error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: non-prime characteristic, negative sizes, bad partition.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// The characteristic exceeds the degree, so p does not divide |S_n|.
class PrimeTooLarge : public Error {
 public:
  PrimeTooLarge(int p, int n)
      : Error("PrimeTooLarge: p = " + std::to_string(p) + " exceeds n = " + std::to_string(n)) {}
};

/// An enumeration route would exceed its configured budget.
class InstanceTooLarge : public Error {
 public:
  using Error::Error;
};

class UnknownIdentity : public Error {
 public:
  explicit UnknownIdentity(const std::string& name) : Error("UnknownIdentity: " + name) {}
};

class ParamsOutOfDomain : public Error {
 public:
  using Error::Error;
};

/// An orbit count that should divide exactly left a remainder.
class NonIntegralMultiplicity : public Error {
 public:
  using Error::Error;
};

}  // namespace bsgamma

#endif
