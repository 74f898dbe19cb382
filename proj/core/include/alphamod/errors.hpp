#pragma once

#include <stdexcept>
#include <string>

namespace alphamod {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

#define ALPHAMOD_DEFINE_ERROR(Name)                                  \
    class Name : public Error {                                      \
    public:                                                          \
        explicit Name(const std::string& msg) : Error(msg) {}        \
    }

ALPHAMOD_DEFINE_ERROR(InvalidParams);
ALPHAMOD_DEFINE_ERROR(InvalidProbability);
ALPHAMOD_DEFINE_ERROR(InvalidMeasure);
ALPHAMOD_DEFINE_ERROR(ParseError);
ALPHAMOD_DEFINE_ERROR(LabelMismatch);
ALPHAMOD_DEFINE_ERROR(EmptyGraph);
ALPHAMOD_DEFINE_ERROR(ZeroDegree);
ALPHAMOD_DEFINE_ERROR(MissingLatent);
ALPHAMOD_DEFINE_ERROR(NotConverged);
ALPHAMOD_DEFINE_ERROR(BracketFailure);
ALPHAMOD_DEFINE_ERROR(RootNotBracketed);
ALPHAMOD_DEFINE_ERROR(DegenerateMoment);
ALPHAMOD_DEFINE_ERROR(DegenerateDenominator);
ALPHAMOD_DEFINE_ERROR(NotInformative);
ALPHAMOD_DEFINE_ERROR(DegenerateVariance);
ALPHAMOD_DEFINE_ERROR(EmptyClass);
ALPHAMOD_DEFINE_ERROR(EmDegenerate);
ALPHAMOD_DEFINE_ERROR(NoIsolatedEigenvalue);
ALPHAMOD_DEFINE_ERROR(KMismatch);

#undef ALPHAMOD_DEFINE_ERROR

}  // namespace alphamod
