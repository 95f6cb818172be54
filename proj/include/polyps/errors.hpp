#pragma once

#include <stdexcept>
#include <string>

namespace polyps {

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Numerical precondition failures.
struct SingularLeadingCoefficient : Error {
    explicit SingularLeadingCoefficient(const std::string& msg = "leading coefficient is numerically singular")
        : Error(msg) {}
};
struct NotSimple : Error {
    explicit NotSimple(const std::string& msg = "eigenvalue failed the simplicity guard") : Error(msg) {}
};
struct DegenerateSpectrum : Error {
    explicit DegenerateSpectrum(const std::string& msg = "fewer than two usable eigenvalues") : Error(msg) {}
};
struct ZeroProjection : Error {
    explicit ZeroProjection(const std::string& msg = "structured projection vanishes") : Error(msg) {}
};
struct AllZeroDirection : Error {
    explicit AllZeroDirection(const std::string& msg = "every coefficient of the perturbation direction is zero")
        : Error(msg) {}
};

// User / input errors.
struct DimensionMismatch : Error {
    explicit DimensionMismatch(const std::string& msg = "dimension mismatch") : Error(msg) {}
};
struct ParseError : Error {
    explicit ParseError(const std::string& msg) : Error(msg) {}
};

} // namespace polyps
