#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace clonelab {

/// Elements of the infinite carrier are naturals; all arithmetic on them is checked.
using Nat = std::uint64_t;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// A computation would exceed its configured budget.
class ResourceLimit : public Error {
 public:
  using Error::Error;
};

/// A finite construction was shown not to apply on the verification box.
class ConstructionRefuted : public Error {
 public:
  using Error::Error;
};

class DegenerateWitness : public Error {
 public:
  using Error::Error;
};

class InvalidColoring : public Error {
 public:
  using Error::Error;
};

/// Sampling could not decide a classification within the probe budget.
class Inconclusive : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class RegistryError : public Error {
 public:
  using Error::Error;
};

/// A supplied function violates the boundary identities a construction needs.
class InvalidH : public Error {
 public:
  using Error::Error;
};

class OverflowError : public Error {
 public:
  using Error::Error;
};

inline Nat checked_add(Nat a, Nat b) {
  Nat r = 0;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("natural addition overflow");
  return r;
}

inline Nat checked_mul(Nat a, Nat b) {
  Nat r = 0;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("natural multiplication overflow");
  return r;
}

}  // namespace clonelab
