#pragma once

#include <stdexcept>
#include <string>

namespace cospec {

// Base for every error raised by the library. `kind()` is the stable name
// used in CLI reports.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& what)
      : std::runtime_error(what), kind_(std::move(kind)) {}
  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

#define COSPEC_DEFINE_ERROR(Name)                                      \
  class Name : public Error {                                          \
   public:                                                             \
    explicit Name(const std::string& what) : Error(#Name, what) {}     \
  };

COSPEC_DEFINE_ERROR(LengthError)
COSPEC_DEFINE_ERROR(AlphabetError)
COSPEC_DEFINE_ERROR(ParameterError)
COSPEC_DEFINE_ERROR(DegreeError)
COSPEC_DEFINE_ERROR(ShapeError)
COSPEC_DEFINE_ERROR(FormatError)
COSPEC_DEFINE_ERROR(NumericalError)
COSPEC_DEFINE_ERROR(InterpolationError)
COSPEC_DEFINE_ERROR(BudgetError)
COSPEC_DEFINE_ERROR(PoleError)
COSPEC_DEFINE_ERROR(IdentityError)
COSPEC_DEFINE_ERROR(RecipeError)

#undef COSPEC_DEFINE_ERROR

}  // namespace cospec
