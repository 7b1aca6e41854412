#pragma once

#include <stdexcept>
#include <string>

namespace torsionlab {

class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& msg)
      : std::runtime_error(kind + ": " + msg), kind_(std::move(kind)) {}
  const std::string& kind() const { return kind_; }

 private:
  std::string kind_;
};

#define TORSIONLAB_ERROR(Name)                                   \
  class Name : public Error {                                    \
   public:                                                       \
    explicit Name(const std::string& msg) : Error(#Name, msg) {} \
  };

TORSIONLAB_ERROR(DivisionByZero)
TORSIONLAB_ERROR(MixedFields)
TORSIONLAB_ERROR(UnsupportedField)
TORSIONLAB_ERROR(DenominatorDivisibleByP)
TORSIONLAB_ERROR(NotSplitPrime)
TORSIONLAB_ERROR(SquareTwistParameter)
TORSIONLAB_ERROR(SingularCurve)
TORSIONLAB_ERROR(PointNotOnCurve)
TORSIONLAB_ERROR(NonIntegralInput)
TORSIONLAB_ERROR(NonIntegralAtP)
TORSIONLAB_ERROR(NoGoodPrimeFound)
TORSIONLAB_ERROR(PrecisionExhausted)
TORSIONLAB_ERROR(ConsistencyFailure)
TORSIONLAB_ERROR(FactorizationExhausted)
TORSIONLAB_ERROR(UnsupportedGroup)
TORSIONLAB_ERROR(UnknownName)
TORSIONLAB_ERROR(PointNotOnSource)
TORSIONLAB_ERROR(PointNotOnModel)
TORSIONLAB_ERROR(DegenerateParameter)
TORSIONLAB_ERROR(InvalidDivisor)
TORSIONLAB_ERROR(BadReduction)
TORSIONLAB_ERROR(ZeroPolynomial)
TORSIONLAB_ERROR(RecordMismatch)
TORSIONLAB_ERROR(RowMismatch)

#undef TORSIONLAB_ERROR

// Parse errors carry the byte offset of the failure.
class SyntaxError : public Error {
 public:
  SyntaxError(const std::string& msg, std::size_t pos)
      : Error("SyntaxError", msg + " at position " + std::to_string(pos)), pos_(pos) {}
  std::size_t position() const { return pos_; }

 private:
  std::size_t pos_;
};

}  // namespace torsionlab
