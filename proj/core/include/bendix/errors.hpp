#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace bendix {

/// Base class for all domain failures. `kind()` is a stable,
/// machine-readable tag mirrored into CLI error objects.
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& message)
        : std::runtime_error(message), kind_(std::move(kind)) {}
    const std::string& kind() const noexcept { return kind_; }

private:
    std::string kind_;
};

#define BENDIX_ERROR_TYPE(Name)                               \
    class Name : public Error {                               \
    public:                                                   \
        explicit Name(const std::string& message)             \
            : Error(#Name, message) {}                        \
    }

BENDIX_ERROR_TYPE(EigenSolverFailure);
BENDIX_ERROR_TYPE(DegenerateEigenvalue);
BENDIX_ERROR_TYPE(NotAProjection);
BENDIX_ERROR_TYPE(SizeLimit);
BENDIX_ERROR_TYPE(ClosureViolation);
BENDIX_ERROR_TYPE(PoleEvaluation);
BENDIX_ERROR_TYPE(RepeatedEigenvalue);
BENDIX_ERROR_TYPE(InterlacingViolation);
BENDIX_ERROR_TYPE(StrictInterlacingViolation);
BENDIX_ERROR_TYPE(BoundaryPattern);
BENDIX_ERROR_TYPE(NormDefect);
BENDIX_ERROR_TYPE(EmptyInterior);
BENDIX_ERROR_TYPE(ZeroVector);
BENDIX_ERROR_TYPE(IndexOutOfRange);
BENDIX_ERROR_TYPE(DomainError);
BENDIX_ERROR_TYPE(ParseError);

#undef BENDIX_ERROR_TYPE

}  // namespace bendix
