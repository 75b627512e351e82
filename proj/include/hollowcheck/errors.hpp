#pragma once

#include <stdexcept>
#include <string>

namespace hollowcheck {

// Base for every error raised by the library. Subclasses name the contract
// that was violated so callers can dispatch on type.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

#define HOLLOWCHECK_ERROR(Name)                 \
    class Name : public Error {                 \
    public:                                     \
        explicit Name(const std::string& what)  \
            : Error(#Name ": " + what) {}       \
    }

// densemat
HOLLOWCHECK_ERROR(DimensionMismatch);
HOLLOWCHECK_ERROR(InvalidDimension);
HOLLOWCHECK_ERROR(Singular);
HOLLOWCHECK_ERROR(RankDeficient);
HOLLOWCHECK_ERROR(NotRightInverse);
HOLLOWCHECK_ERROR(NotInRowSpace);

// interval
HOLLOWCHECK_ERROR(UndefinedSum);
HOLLOWCHECK_ERROR(InvalidInterval);

// standardize
HOLLOWCHECK_ERROR(AllRowsRemoved);
HOLLOWCHECK_ERROR(AssumptionViolation);

// emptiness
HOLLOWCHECK_ERROR(NoInvertibleSubmatrix);
HOLLOWCHECK_ERROR(MixedSigns);

// oracle
HOLLOWCHECK_ERROR(SizeExceeded);

// harness
HOLLOWCHECK_ERROR(GenerationExhausted);
HOLLOWCHECK_ERROR(ProbeFailure);
HOLLOWCHECK_ERROR(SoundnessViolation);

// cli
HOLLOWCHECK_ERROR(ParseError);
HOLLOWCHECK_ERROR(DimensionError);

#undef HOLLOWCHECK_ERROR

}  // namespace hollowcheck
