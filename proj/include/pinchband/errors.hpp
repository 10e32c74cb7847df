#pragma once

#include <stdexcept>
#include <string>

namespace pinchband {

/// Base class for every domain failure raised by the workbench.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define PINCHBAND_ERROR(Name)             \
  class Name : public Error {             \
   public:                                \
    using Error::Error;                   \
  }

// diagram
PINCHBAND_ERROR(SyntaxError);
PINCHBAND_ERROR(EdgeLabelError);
PINCHBAND_ERROR(MultiComponentError);
PINCHBAND_ERROR(PlanarityError);
PINCHBAND_ERROR(EvenParameter);
PINCHBAND_ERROR(UnknownName);

// goeritz
PINCHBAND_ERROR(NonSymmetricInput);
PINCHBAND_ERROR(ColoringDisagreement);

// identify
PINCHBAND_ERROR(TooManyCrossings);

// cobordism
PINCHBAND_ERROR(NonKnotResult);
PINCHBAND_ERROR(InvalidSite);
PINCHBAND_ERROR(UnknownKnot);
PINCHBAND_ERROR(NonIntegralSigma);
PINCHBAND_ERROR(NotKnownSlice);
PINCHBAND_ERROR(BoundaryMismatch);

// realizability
PINCHBAND_ERROR(InvalidN);

#undef PINCHBAND_ERROR

}  // namespace pinchband
