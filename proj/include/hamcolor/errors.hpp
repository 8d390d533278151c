#pragma once

#include <stdexcept>
#include <string>

namespace hamcolor {

// Base of every recoverable error raised by the library. Internal invariant
// violations use std::logic_error instead.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

#define HAMCOLOR_DEFINE_ERROR(Name)  \
  class Name : public Error {        \
   public:                           \
    using Error::Error;              \
  };

HAMCOLOR_DEFINE_ERROR(ValidationError)
HAMCOLOR_DEFINE_ERROR(ColorOutOfRange)
HAMCOLOR_DEFINE_ERROR(OverlappingSides)
HAMCOLOR_DEFINE_ERROR(InvalidCycle)
HAMCOLOR_DEFINE_ERROR(NotHamiltonian)
HAMCOLOR_DEFINE_ERROR(BudgetExceeded)
HAMCOLOR_DEFINE_ERROR(NotALinearForest)
HAMCOLOR_DEFINE_ERROR(NoExtensionFound)
HAMCOLOR_DEFINE_ERROR(InvalidBowtie)
HAMCOLOR_DEFINE_ERROR(NotDisjoint)
HAMCOLOR_DEFINE_ERROR(NotKBad)
HAMCOLOR_DEFINE_ERROR(DivisibilityError)
HAMCOLOR_DEFINE_ERROR(ParameterError)
HAMCOLOR_DEFINE_ERROR(TargetsInfeasible)
HAMCOLOR_DEFINE_ERROR(ModeInconclusive)
HAMCOLOR_DEFINE_ERROR(NotAPartition)
HAMCOLOR_DEFINE_ERROR(NotATriangle)
HAMCOLOR_DEFINE_ERROR(IoError)

#undef HAMCOLOR_DEFINE_ERROR

}  // namespace hamcolor
