#pragma once

#include <stdexcept>
#include <string>

namespace tfu {

// Every failure raised by the library derives from Error so callers (the CLI in
// particular) can map the whole family onto one exit path.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define TFU_DECLARE_ERROR(Name)            \
  class Name : public Error {              \
   public:                                 \
    using Error::Error;                    \
  };

TFU_DECLARE_ERROR(InvalidGrid)
TFU_DECLARE_ERROR(SamplingError)
TFU_DECLARE_ERROR(IncompatibleGrids)
TFU_DECLARE_ERROR(DomainMismatch)
TFU_DECLARE_ERROR(ZeroNorm)
TFU_DECLARE_ERROR(TruncationError)
TFU_DECLARE_ERROR(BandwidthError)
TFU_DECLARE_ERROR(KernelError)
TFU_DECLARE_ERROR(PreconditionError)
TFU_DECLARE_ERROR(ResolutionLimit)
TFU_DECLARE_ERROR(DimensionError)
TFU_DECLARE_ERROR(CaseViolation)
TFU_DECLARE_ERROR(FormatError)

#undef TFU_DECLARE_ERROR

}  // namespace tfu
