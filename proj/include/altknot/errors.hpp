#pragma once

#include <stdexcept>
#include <string>

namespace altknot {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define ALTKNOT_DEFINE_ERROR(Name) \
  class Name : public Error {      \
   public:                         \
    using Error::Error;            \
  }

// polynomials
ALTKNOT_DEFINE_ERROR(NonZeroRemainder);
ALTKNOT_DEFINE_ERROR(DivisionByZero);

// matrices
ALTKNOT_DEFINE_ERROR(MalformedMatrix);
ALTKNOT_DEFINE_ERROR(DecompositionFailure);
ALTKNOT_DEFINE_ERROR(NotDivisible);

// Gauss codes and diagrams
ALTKNOT_DEFINE_ERROR(SyntaxError);
ALTKNOT_DEFINE_ERROR(NonAlternating);
ALTKNOT_DEFINE_ERROR(BadCrossingUse);
ALTKNOT_DEFINE_ERROR(AlternationConflict);
ALTKNOT_DEFINE_ERROR(ClosureDisconnected);
ALTKNOT_DEFINE_ERROR(EmptyDiagram);
ALTKNOT_DEFINE_ERROR(InvalidArgument);

// Conway functions and catalog
ALTKNOT_DEFINE_ERROR(ArityMismatch);
ALTKNOT_DEFINE_ERROR(OutOfRange);
ALTKNOT_DEFINE_ERROR(EmptyVector);
ALTKNOT_DEFINE_ERROR(NoRealization);

#undef ALTKNOT_DEFINE_ERROR

}  // namespace altknot
