#pragma once

#include <stdexcept>
#include <string>

namespace racah {

// Every failure raised by the library derives from Error so callers can
// catch one type; the subclasses exist for tests and for exit-code mapping.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

#define RACAH_ERROR(Name) \
    struct Name : Error { using Error::Error; }

RACAH_ERROR(DenominatorPole);
RACAH_ERROR(InvalidQ);
RACAH_ERROR(OutOfCone);
RACAH_ERROR(BadRow);
RACAH_ERROR(NotSpecialCase);
RACAH_ERROR(DegenerateDenominator);
RACAH_ERROR(InvariantViolation);
RACAH_ERROR(RegimeMismatch);
RACAH_ERROR(DomainError);
RACAH_ERROR(BadEpsilon);
RACAH_ERROR(BadDeltas);
RACAH_ERROR(TooLarge);
RACAH_ERROR(Unsupported);

#undef RACAH_ERROR

}  // namespace racah
