#pragma once

#include <stdexcept>
#include <string>

namespace lieboson {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define LIEBOSON_ERROR(Name)                  \
  class Name : public Error {                 \
   public:                                    \
    explicit Name(const std::string& what)    \
        : Error(#Name ": " + what) {}         \
  }

LIEBOSON_ERROR(ZeroDivision);
LIEBOSON_ERROR(Unsupported);
LIEBOSON_ERROR(DomainError);
LIEBOSON_ERROR(TriangleError);
LIEBOSON_ERROR(NotClosed);
LIEBOSON_ERROR(LinearlyDependent);
LIEBOSON_ERROR(NotReductive);
LIEBOSON_ERROR(NotSl2);
LIEBOSON_ERROR(NotBilinear);
LIEBOSON_ERROR(NonIntegerSpectrum);
LIEBOSON_ERROR(NotDiagonalizable);
LIEBOSON_ERROR(DegenerateForm);
LIEBOSON_ERROR(NotNumberConserving);
LIEBOSON_ERROR(NotHermitian);
LIEBOSON_ERROR(NotConverged);
LIEBOSON_ERROR(UnknownModel);
LIEBOSON_ERROR(VerificationFailure);

#undef LIEBOSON_ERROR

}  // namespace lieboson
