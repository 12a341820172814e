#pragma once

#include <stdexcept>
#include <string>

namespace creutz {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A parameter or argument is outside its documented domain. Carries the
/// offending field name so front ends can report it.
class InvalidParameter : public Error {
 public:
  InvalidParameter(std::string field, const std::string& what)
      : Error(field + ": " + what), field_(std::move(field)) {}
  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

/// The request is well formed but the physics does not admit an answer
/// (gapless system, closed form outside its validity, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

#define CREUTZ_DOMAIN_ERROR(Name)          \
  class Name : public DomainError {        \
   public:                                 \
    using DomainError::DomainError;        \
  }

CREUTZ_DOMAIN_ERROR(MetallicSystem);
CREUTZ_DOMAIN_ERROR(PathThroughOrigin);
CREUTZ_DOMAIN_ERROR(FlatBandRequired);
CREUTZ_DOMAIN_ERROR(BulkOnly);
CREUTZ_DOMAIN_ERROR(RungsPresent);
CREUTZ_DOMAIN_ERROR(DimensionMismatch);
CREUTZ_DOMAIN_ERROR(NonHermitian);
CREUTZ_DOMAIN_ERROR(NoMinimumFound);
CREUTZ_DOMAIN_ERROR(NoMidgapState);
CREUTZ_DOMAIN_ERROR(SymmetryViolation);

#undef CREUTZ_DOMAIN_ERROR

}  // namespace creutz
