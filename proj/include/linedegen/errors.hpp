#pragma once

#include <stdexcept>
#include <string>

namespace linedegen {

/// Caller passed parameters outside the documented range.
struct ArgumentError : std::invalid_argument {
  explicit ArgumentError(const std::string& what) : std::invalid_argument(what) {}
};

/// An operation was applied to a value that does not satisfy its precondition
/// (e.g. Schur conversion of an asymmetric polynomial).
struct PreconditionError : std::domain_error {
  explicit PreconditionError(const std::string& what) : std::domain_error(what) {}
};

/// An exact computation produced something that must not happen if the
/// underlying algebra is right (non-zero remainder, non-constant quotient).
struct InvariantViolation : std::logic_error {
  explicit InvariantViolation(const std::string& what) : std::logic_error(what) {}
};

/// Integration of a Chow element that is not of pure top degree.
struct DegreeError : std::domain_error {
  explicit DegreeError(const std::string& what) : std::domain_error(what) {}
};

}  // namespace linedegen
