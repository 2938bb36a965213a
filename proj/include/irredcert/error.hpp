#pragma once

#include <stdexcept>
#include <string>

namespace irredcert {

/// Base of every error raised by the toolkit.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define IRREDCERT_DEFINE_ERROR(Name)          \
  class Name : public Error {                 \
   public:                                    \
    using Error::Error;                       \
  }

IRREDCERT_DEFINE_ERROR(ParseError);
IRREDCERT_DEFINE_ERROR(NotPrime);
IRREDCERT_DEFINE_ERROR(NotIrreducible);
IRREDCERT_DEFINE_ERROR(DivisionByZero);
IRREDCERT_DEFINE_ERROR(IntegralityError);
IRREDCERT_DEFINE_ERROR(ShapeError);
IRREDCERT_DEFINE_ERROR(SingularError);
IRREDCERT_DEFINE_ERROR(RingMismatch);
IRREDCERT_DEFINE_ERROR(RelationError);
IRREDCERT_DEFINE_ERROR(BudgetExceeded);
IRREDCERT_DEFINE_ERROR(BadPrime);
IRREDCERT_DEFINE_ERROR(NotSublattice);
IRREDCERT_DEFINE_ERROR(SizeBound);
IRREDCERT_DEFINE_ERROR(GroupTooLarge);
IRREDCERT_DEFINE_ERROR(ModuleMismatch);
IRREDCERT_DEFINE_ERROR(AbsIrredUndecided);
IRREDCERT_DEFINE_ERROR(VersionMismatch);

#undef IRREDCERT_DEFINE_ERROR

}  // namespace irredcert
