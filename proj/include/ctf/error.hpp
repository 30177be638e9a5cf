#pragma once

#include <stdexcept>
#include <string>

namespace ctf {

/// Base for every error raised by the solver.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Bad user input: malformed wall files, invalid layer data, bad options.
class InputError : public Error {
 public:
  using Error::Error;
};

class InvalidConstruction : public InputError {
 public:
  using InputError::InputError;
};

class ParseError : public InputError {
 public:
  using InputError::InputError;
};

/// The numerics could not produce a trustworthy result.
class NumericalError : public Error {
 public:
  using Error::Error;
};

/// Singular or badly solved Pade system.
class ApproximationFailure : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class RootFailure : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

/// A pole (or z-plane root) lies on the wrong side of the stability boundary.
class InstabilityError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class MultiplicityError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

/// Super-order terms survived the z-transfer assembly.
class AssemblyError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class OracleError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

}  // namespace ctf
