#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "hypersdf/subset.hpp"

namespace hypersdf {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Tables that are not even shaped like a hyperring (wrong dimensions,
// out-of-range indices, empty product cells). Distinct from axiom failures,
// which are reported in an AxiomReport.
class StructuralError : public Error {
 public:
  using Error::Error;
};

// A precondition on an argument failed: a subset that should be a (proper)
// hyperideal is not, a designated identity is missing, a size cap is
// exceeded, and so on.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// A constructor detected that its output would not be a hyperring. Carries
// the offending element tuple.
class ConstructionError : public Error {
 public:
  ConstructionError(std::string const& what, std::vector<Element> witness)
      : Error(what), witness_(std::move(witness)) {}

  [[nodiscard]] std::vector<Element> const& witness() const noexcept { return witness_; }

 private:
  std::vector<Element> witness_;
};

}  // namespace hypersdf
