#pragma once

#include <stdexcept>
#include <string>

namespace lgmk {

/// Base of every error raised by the library. The CLI maps all of these to
/// exit status 1 (input error).
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands that do not fit together (arity, truncation, grading mismatch).
class StructuralError : public Error {
 public:
  using Error::Error;
};

/// A mathematical precondition failed (nonzero constant term for exp, z <= 0, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// The request is well-formed but outside what this toolkit computes.
class UnsupportedError : public Error {
 public:
  using Error::Error;
};

/// Theta-basis decomposition was not unique; never resolved silently.
class InconsistencyError : public Error {
 public:
  using Error::Error;
};

enum class GeometryErrorCode {
  malformed,
  not_anticanonical,
  non_simplicial_cone,
  singular_cone,
  not_fano,
  singular_pairing,
  not_pure_dimensional,
  fan_relation_violated,
  non_associative,
  unknown_preset,
};

const char* to_string(GeometryErrorCode code);

/// Rejected geometry input. Each code carries its own diagnostic text.
class GeometryError : public Error {
 public:
  GeometryError(GeometryErrorCode code, const std::string& detail)
      : Error(std::string(to_string(code)) + ": " + detail), code_(code) {}
  GeometryErrorCode code() const noexcept { return code_; }

 private:
  GeometryErrorCode code_;
};

}  // namespace lgmk
