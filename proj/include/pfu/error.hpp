#pragma once

#include <stdexcept>
#include <string>

namespace pfu {

/// Base class of every error raised by the library. The CLI maps these to
/// exit code 1 (bad input) and everything else to exit code 2.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define PFU_DEFINE_ERROR(Name)                                   \
  class Name : public Error {                                    \
   public:                                                       \
    explicit Name(const std::string& what = #Name) : Error(what) {} \
  };

// exact
PFU_DEFINE_ERROR(ZeroPolynomial)
PFU_DEFINE_ERROR(DivisionByZero)
// series
PFU_DEFINE_ERROR(DivisionByZeroSeries)
PFU_DEFINE_ERROR(BadConstantTerm)
PFU_DEFINE_ERROR(CompositionDiverges)
PFU_DEFINE_ERROR(BadValuation)
PFU_DEFINE_ERROR(ConstantInput)
PFU_DEFINE_ERROR(PrecisionRequired)
// ode
PFU_DEFINE_ERROR(NotFuchsian)
PFU_DEFINE_ERROR(UnsupportedExponentField)
PFU_DEFINE_ERROR(NotIntegerDifference)
PFU_DEFINE_ERROR(OrderMismatch)
// transform
PFU_DEFINE_ERROR(ConstantMap)
PFU_DEFINE_ERROR(UnclassifiedSourcePoint)
PFU_DEFINE_ERROR(NotSymmetricSquare)
PFU_DEFINE_ERROR(NotCyclic)
// uniformize
PFU_DEFINE_ERROR(NotPNF)
// elliptic
PFU_DEFINE_ERROR(IdenticallySingular)
PFU_DEFINE_ERROR(ConstantJ)
// k3
PFU_DEFINE_ERROR(SignatureValueCollision)
PFU_DEFINE_ERROR(TruncationTooShort)
// mirror
PFU_DEFINE_ERROR(NotMUM)
PFU_DEFINE_ERROR(UnsupportedLocation)
// data / cli
PFU_DEFINE_ERROR(UnknownFixture)
PFU_DEFINE_ERROR(InputError)

#undef PFU_DEFINE_ERROR

/// Raised when an internal consistency check fails (a bug, not bad input).
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace pfu
