#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace walklab {

// Base class for all library errors. Subclasses correspond to the failure
// modes of the individual operations; the CLI maps them onto exit codes.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

class GroupMismatch : public Error {
 public:
  using Error::Error;
};

class NoProjection : public Error {
 public:
  using Error::Error;
};

// Element count of a closure exceeded the configured cap.
class ClosureOverflow : public Error {
 public:
  ClosureOverflow(const std::string& what, std::size_t cap)
      : Error(what), cap(cap) {}
  std::size_t cap;
};

// Atom count of a convolution exceeded the cap; carries the mass reached.
class SupportOverflow : public Error {
 public:
  SupportOverflow(const std::string& what, std::size_t atoms, double mass_reached)
      : Error(what), atoms(atoms), mass_reached(mass_reached) {}
  std::size_t atoms;
  double mass_reached;
};

class MemoryCap : public Error {
 public:
  using Error::Error;
};

class MetricUnavailable : public Error {
 public:
  using Error::Error;
};

// A tracked step invariant of a coupling failed; carries the step index.
class InvariantViolation : public Error {
 public:
  InvariantViolation(const std::string& what, std::int64_t step)
      : Error(what), step(step) {}
  std::int64_t step;
};

class InfiniteClassSuspected : public Error {
 public:
  using Error::Error;
};

class CapExceeded : public Error {
 public:
  using Error::Error;
};

class ValidationFailed : public Error {
 public:
  ValidationFailed(const std::string& what, int factor_index)
      : Error(what), factor_index(factor_index) {}
  int factor_index;
};

class SupportEscapesWindow : public Error {
 public:
  using Error::Error;
};

class BoundaryTouched : public Error {
 public:
  using Error::Error;
};

class SolverDiverged : public Error {
 public:
  using Error::Error;
};

class RecurrentRegime : public Error {
 public:
  using Error::Error;
};

}  // namespace walklab
