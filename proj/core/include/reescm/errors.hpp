#pragma once

#include <stdexcept>
#include <string>

namespace reescm {

/// Base class for all errors raised by the library. kind() is the stable
/// machine-readable name used in CLI diagnostics.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
  virtual const char* kind() const { return "Error"; }
};

#define REESCM_DEFINE_ERROR(Name)                                   \
  class Name : public Error {                                       \
   public:                                                          \
    explicit Name(const std::string& what = #Name) : Error(what) {} \
    const char* kind() const override { return #Name; }             \
  }

REESCM_DEFINE_ERROR(EmptyInput);
REESCM_DEFINE_ERROR(VertexOutOfRange);
REESCM_DEFINE_ERROR(NotAFace);
REESCM_DEFINE_ERROR(NotAPermutation);
REESCM_DEFINE_ERROR(NotNested);
REESCM_DEFINE_ERROR(DegenerateComplex);
REESCM_DEFINE_ERROR(NotAShellingStep);
REESCM_DEFINE_ERROR(NotPure);
REESCM_DEFINE_ERROR(NotAShelling);
REESCM_DEFINE_ERROR(DimsNotNonincreasing);
REESCM_DEFINE_ERROR(NotShellable);
REESCM_DEFINE_ERROR(CrossCheckDisagreement);
REESCM_DEFINE_ERROR(NotPrime);
REESCM_DEFINE_ERROR(SyntaxError);

#undef REESCM_DEFINE_ERROR

}  // namespace reescm
