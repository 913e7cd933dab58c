#pragma once

#include <stdexcept>
#include <string>

namespace algkit {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define ALGKIT_DEFINE_ERROR(Name)     \
  class Name : public Error {         \
   public:                            \
    using Error::Error;               \
  };

ALGKIT_DEFINE_ERROR(InvalidAlgebra)
ALGKIT_DEFINE_ERROR(MissingOperation)
ALGKIT_DEFINE_ERROR(KindMismatch)
ALGKIT_DEFINE_ERROR(UnknownBuiltin)
ALGKIT_DEFINE_ERROR(InvalidMorphism)
ALGKIT_DEFINE_ERROR(InvalidSemilattice)
ALGKIT_DEFINE_ERROR(InvalidSystem)
ALGKIT_DEFINE_ERROR(InvalidSystemMorphism)
ALGKIT_DEFINE_ERROR(DomainMismatch)
ALGKIT_DEFINE_ERROR(FiberSplit)
ALGKIT_DEFINE_ERROR(NotIBSL)
ALGKIT_DEFINE_ERROR(NotBoolean)
ALGKIT_DEFINE_ERROR(NotBisemilattice)
ALGKIT_DEFINE_ERROR(NotDistributive)
ALGKIT_DEFINE_ERROR(NotGRSpace)
ALGKIT_DEFINE_ERROR(NotPoset)
ALGKIT_DEFINE_ERROR(IsomorphismFailure)
ALGKIT_DEFINE_ERROR(IllDefinedTransition)
ALGKIT_DEFINE_ERROR(NoLowerBound)
ALGKIT_DEFINE_ERROR(UnboundedTransition)

#undef ALGKIT_DEFINE_ERROR

}  // namespace algkit
