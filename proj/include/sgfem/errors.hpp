#pragma once

#include <stdexcept>
#include <string>

namespace sgfem {

/// Invalid argument outside the documented parameter domain.
class ParameterError : public std::invalid_argument {
 public:
  explicit ParameterError(const std::string& msg) : std::invalid_argument(msg) {}
};

/// Requested operation exceeds a supported capability (quadrature degree,
/// dense eigensolve size, ...).
class CapabilityError : public std::runtime_error {
 public:
  explicit CapabilityError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Linear algebra failure: singular factorization or residual above contract.
class SolveError : public std::runtime_error {
 public:
  explicit SolveError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Degenerate geometry or a basis bug detected during element construction.
class UnisolvenceError : public std::runtime_error {
 public:
  explicit UnisolvenceError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace sgfem
