#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace parahn {

// Every domain failure carries a stable machine-readable code next to the
// human message; the CLI maps codes to exit statuses and JSON error records.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& what)
      : std::runtime_error(what), code_(std::move(code)) {}
  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

#define PARAHN_DEFINE_ERROR(Name)                                  \
  class Name : public Error {                                      \
   public:                                                         \
    explicit Name(const std::string& what) : Error(#Name, what) {} \
  };

PARAHN_DEFINE_ERROR(NotPrime)
PARAHN_DEFINE_ERROR(InvalidDegree)
PARAHN_DEFINE_ERROR(FieldMismatch)
PARAHN_DEFINE_ERROR(DivisionByZero)
PARAHN_DEFINE_ERROR(ShapeMismatch)
PARAHN_DEFINE_ERROR(DegreeBoundViolated)
PARAHN_DEFINE_ERROR(NotInjective)
PARAHN_DEFINE_ERROR(NotInvertible)
PARAHN_DEFINE_ERROR(FullRank)
PARAHN_DEFINE_ERROR(InvalidSubbundle)
PARAHN_DEFINE_ERROR(InvalidBundle)
PARAHN_DEFINE_ERROR(NotNested)
PARAHN_DEFINE_ERROR(EqualRanks)
PARAHN_DEFINE_ERROR(IncompatibleShape)
PARAHN_DEFINE_ERROR(NonUniqueMaximum)
PARAHN_DEFINE_ERROR(LengthMismatch)
PARAHN_DEFINE_ERROR(NoComparableStratum)
PARAHN_DEFINE_ERROR(DegenerateFlagAt)
PARAHN_DEFINE_ERROR(InvalidFiltration)
PARAHN_DEFINE_ERROR(BadIndex)
PARAHN_DEFINE_ERROR(MultiplePoints)
PARAHN_DEFINE_ERROR(BadWeights)
PARAHN_DEFINE_ERROR(ParseError)
PARAHN_DEFINE_ERROR(SchemaError)
PARAHN_DEFINE_ERROR(ConsistencyError)
PARAHN_DEFINE_ERROR(UnknownCommand)

#undef PARAHN_DEFINE_ERROR

// Raised when an enumeration would visit more candidates than the configured
// cap. The count is the number that would have been visited.
class BudgetExceeded : public Error {
 public:
  BudgetExceeded(std::uint64_t candidates, std::uint64_t cap)
      : Error("BudgetExceeded", "enumeration needs " + std::to_string(candidates) +
                                    " candidates, cap is " + std::to_string(cap)),
        candidates_(candidates),
        cap_(cap) {}
  std::uint64_t candidates() const noexcept { return candidates_; }
  std::uint64_t cap() const noexcept { return cap_; }

 private:
  std::uint64_t candidates_;
  std::uint64_t cap_;
};

}  // namespace parahn
