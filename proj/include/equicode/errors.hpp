#pragma once

#include <stdexcept>
#include <string>

namespace equicode {

// Root of every error the library raises on purpose.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

#define EQUICODE_DEFINE_ERROR(Name)        \
    class Name : public Error {            \
    public:                                \
        using Error::Error;                \
    }

EQUICODE_DEFINE_ERROR(NotInvertible);
EQUICODE_DEFINE_ERROR(TooLarge);
EQUICODE_DEFINE_ERROR(GroupTooLarge);
EQUICODE_DEFINE_ERROR(NotOrbitConstant);
EQUICODE_DEFINE_ERROR(DimensionMismatch);
EQUICODE_DEFINE_ERROR(NotDivisible);
EQUICODE_DEFINE_ERROR(NonIntegerResult);
EQUICODE_DEFINE_ERROR(NotMember);
EQUICODE_DEFINE_ERROR(NotDiscrete);
EQUICODE_DEFINE_ERROR(NotConverged);
EQUICODE_DEFINE_ERROR(ParseError);
EQUICODE_DEFINE_ERROR(PreconditionFailed);

#undef EQUICODE_DEFINE_ERROR

} // namespace equicode
