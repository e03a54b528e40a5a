#pragma once

#include <stdexcept>
#include <string>

namespace trefoil {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IncompatibleAlgebras : public Error {
 public:
  IncompatibleAlgebras() : Error("incompatible quaternion algebras") {}
};

class NotUnit : public Error {
 public:
  explicit NotUnit(const std::string& what) : Error("quaternion is not a unit: " + what) {}
};

class Unsupported : public Error {
 public:
  using Error::Error;
};

class DomainError : public Error {
 public:
  using Error::Error;
};

/// Shift decomposition needs a non-null, non-zero axis direction.
class DegenerateAxis : public Error {
 public:
  using Error::Error;
};

/// epoly2 has no root: 4x^2 + 4sx - 3 is the constant -3 at x = 0.
class NoAffineDeformation : public Error {
 public:
  NoAffineDeformation() : Error("no affine deformation: 4x^2+4sx-3 has no root in s at x = 0") {}
};

/// At |x| = sqrt(3)/2 the affine parameter is s = 0.
class TrivialDeformation : public Error {
 public:
  TrivialDeformation() : Error("trivial deformation: s = 0 at |x| = sqrt(3)/2") {}
};

class OffVariety : public Error {
 public:
  explicit OffVariety(const std::string& what) : Error("off the linear variety: " + what) {}
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class NotHyperbolic : public Error {
 public:
  using Error::Error;
};

}  // namespace trefoil
