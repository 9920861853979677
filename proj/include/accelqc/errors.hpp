#pragma once

#include <stdexcept>
#include <string>

namespace accelqc {

/// Broad failure category; the command-line tool maps each one to an exit code.
enum class ErrorKind {
  Usage,
  Domain,
  Numerical,
  Io,
};

class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}

  [[nodiscard]] ErrorKind kind() const noexcept { return kind_; }

private:
  ErrorKind kind_;
};

// Operand dimensions do not agree.
class DimensionError : public Error {
public:
  explicit DimensionError(const std::string& what) : Error(ErrorKind::Domain, what) {}
};

// A parameter lies outside the domain of the operation.
class DomainError : public Error {
public:
  explicit DomainError(const std::string& what) : Error(ErrorKind::Domain, what) {}
};

class NotHermitianError : public Error {
public:
  explicit NotHermitianError(const std::string& what) : Error(ErrorKind::Numerical, what) {}
};

class ConvergenceError : public Error {
public:
  explicit ConvergenceError(const std::string& what) : Error(ErrorKind::Numerical, what) {}
};

// A matrix fails the density-matrix checks (Hermitian, unit trace, PSD, finite).
class InvalidStateError : public Error {
public:
  explicit InvalidStateError(const std::string& what) : Error(ErrorKind::Numerical, what) {}
};

// The non-unitary evolution annihilated the state (normalization trace too small).
class SingularEvolutionError : public Error {
public:
  explicit SingularEvolutionError(const std::string& what) : Error(ErrorKind::Numerical, what) {}
};

// sec(alpha) would overflow because alpha sits too close to the exceptional point.
class OverflowError : public Error {
public:
  explicit OverflowError(const std::string& what) : Error(ErrorKind::Domain, what) {}
};

class UnknownPresetError : public Error {
public:
  explicit UnknownPresetError(const std::string& what) : Error(ErrorKind::Usage, what) {}
};

class ConfigError : public Error {
public:
  explicit ConfigError(const std::string& what) : Error(ErrorKind::Usage, what) {}
};

class IoError : public Error {
public:
  explicit IoError(const std::string& what) : Error(ErrorKind::Io, what) {}
};

// Carries the category of the failure it wraps, plus the grid point that raised it.
class SweepError : public Error {
public:
  SweepError(ErrorKind kind, const std::string& what) : Error(kind, what) {}
};

}  // namespace accelqc
