// Exception types for all contract violations. Every throwing operation
// documents which of these it can raise.

#pragma once

#include <stdexcept>
#include <string>

namespace hopfcode {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

#define HOPFCODE_DEFINE_ERROR(Name)                    \
  struct Name : Error {                                \
    Name() : Error(#Name) {}                           \
    explicit Name(const std::string& msg)              \
        : Error(std::string(#Name) + ": " + msg) {}    \
  }

HOPFCODE_DEFINE_ERROR(CompositeModulus);
HOPFCODE_DEFINE_ERROR(InvalidOrder);
HOPFCODE_DEFINE_ERROR(NoSuchRoot);
HOPFCODE_DEFINE_ERROR(DivisionByZero);
HOPFCODE_DEFINE_ERROR(FieldMismatch);
HOPFCODE_DEFINE_ERROR(AmbientMismatch);
HOPFCODE_DEFINE_ERROR(AlgebraMismatch);
HOPFCODE_DEFINE_ERROR(NotInvertible);
HOPFCODE_DEFINE_ERROR(BudgetExceeded);
HOPFCODE_DEFINE_ERROR(IndexOutOfRange);
HOPFCODE_DEFINE_ERROR(NotInR);
HOPFCODE_DEFINE_ERROR(ZeroCoefficient);
HOPFCODE_DEFINE_ERROR(DegenerateForm);
HOPFCODE_DEFINE_ERROR(NotMonomial);
HOPFCODE_DEFINE_ERROR(HypothesisViolated);
HOPFCODE_DEFINE_ERROR(NotADivisor);
HOPFCODE_DEFINE_ERROR(BadCharacteristic);
HOPFCODE_DEFINE_ERROR(InvalidPermutation);
HOPFCODE_DEFINE_ERROR(ConfigError);

#undef HOPFCODE_DEFINE_ERROR

}  // namespace hopfcode
