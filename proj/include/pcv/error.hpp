#pragma once

#include <stdexcept>
#include <string>

namespace pcv {

// Typed failure reasons. The code survives into what() as a stable prefix so
// both tests and CLI error paths can dispatch on it.
enum class errc {
    non_unit,
    ring_mismatch,
    non_unit_leading_coefficient,
    not_ell_integral,
    unsupported_weight,
    insufficient_precision,
    not_cuspidal,
    degenerate_leading_weight,
    identity_violation,
    invalid_prime,
    unsupported_prime,
    invalid_argument,
};

inline const char* errc_name(errc c) {
    switch (c) {
        case errc::non_unit: return "NonUnit";
        case errc::ring_mismatch: return "RingMismatch";
        case errc::non_unit_leading_coefficient: return "NonUnitLeadingCoefficient";
        case errc::not_ell_integral: return "NotEllIntegral";
        case errc::unsupported_weight: return "UnsupportedWeight";
        case errc::insufficient_precision: return "InsufficientPrecision";
        case errc::not_cuspidal: return "NotCuspidal";
        case errc::degenerate_leading_weight: return "DegenerateLeadingWeight";
        case errc::identity_violation: return "IdentityViolation";
        case errc::invalid_prime: return "InvalidPrime";
        case errc::unsupported_prime: return "UnsupportedPrime";
        case errc::invalid_argument: return "InvalidArgument";
    }
    return "UnknownError";
}

class error : public std::runtime_error {
public:
    error(errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    errc code() const { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void raise(errc code, const std::string& what) { throw error(code, what); }

}  // namespace pcv
