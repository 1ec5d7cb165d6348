#pragma once

#include <stdexcept>
#include <string>

namespace toricdeg {

// Every failure raised by the library derives from Error. The concrete type
// names the failure class so callers (and the CLI exit-code mapping) can
// dispatch on it.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

#define TORICDEG_DEFINE_ERROR(Name)              \
    class Name : public Error {                  \
    public:                                      \
        using Error::Error;                      \
    }

TORICDEG_DEFINE_ERROR(SyntaxError);
TORICDEG_DEFINE_ERROR(DegreeError);
TORICDEG_DEFINE_ERROR(IndexError);
TORICDEG_DEFINE_ERROR(DimensionMismatch);
TORICDEG_DEFINE_ERROR(ZeroPolynomial);
TORICDEG_DEFINE_ERROR(SingularMatrix);
TORICDEG_DEFINE_ERROR(SupportMismatch);
TORICDEG_DEFINE_ERROR(DomainError);
TORICDEG_DEFINE_ERROR(GenericityFailure);
TORICDEG_DEFINE_ERROR(NormalizationFailure);
TORICDEG_DEFINE_ERROR(CertificateFailure);

#undef TORICDEG_DEFINE_ERROR

} // namespace toricdeg
