// Error taxonomy: every failed hypothesis names itself.
#pragma once

#include <stdexcept>
#include <string>

namespace itheta {

struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

#define ITHETA_DEFINE_ERROR(NAME)                      \
  struct NAME : Error {                                \
    explicit NAME(const std::string& what)             \
        : Error(std::string(#NAME) + ": " + what) {}   \
  }

// Form construction.
ITHETA_DEFINE_ERROR(NotPositiveCoefficients);
ITHETA_DEFINE_ERROR(NotIndefinite);
ITHETA_DEFINE_ERROR(NonIntegralReflection);

// Periodic functions.
ITHETA_DEFINE_ERROR(SupportNotPreserved);
ITHETA_DEFINE_ERROR(NotAdmissible);

// Orbit analysis.
ITHETA_DEFINE_ERROR(NotOddPrime);

// Series.
ITHETA_DEFINE_ERROR(PrecisionMismatch);
ITHETA_DEFINE_ERROR(NonIntegralExponent);
ITHETA_DEFINE_ERROR(AdmissibilityViolation);
ITHETA_DEFINE_ERROR(ValueSetUnsupported);

// Lattice-coset computations.
ITHETA_DEFINE_ERROR(IterationExceeded);
ITHETA_DEFINE_ERROR(InvalidUnit);
ITHETA_DEFINE_ERROR(UnitIsOne);
ITHETA_DEFINE_ERROR(VerificationFailed);

// Field / lattice plumbing.
ITHETA_DEFINE_ERROR(DiscMismatch);
ITHETA_DEFINE_ERROR(NonInvertible);
ITHETA_DEFINE_ERROR(InvalidSector);
ITHETA_DEFINE_ERROR(InvalidLattice);

// Input handling.
ITHETA_DEFINE_ERROR(ParseError);

#undef ITHETA_DEFINE_ERROR

}  // namespace itheta
