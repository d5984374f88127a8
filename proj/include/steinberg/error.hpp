#pragma once

#include <cstdlib>
#include <stdexcept>
#include <string>

namespace steinberg {

enum class errc {
    invalid_rank,
    not_a_root,
    proportional_pair,
    non_integral_pairing,
    budget_exceeded,
    level_mismatch,
    not_a_wall,
    not_type_a2n,
    unsupported_sigma,
    half_integrality_violation,
    unsupported_panel,
    not_harmonic_base,
    not_applicable,
    domain_error,
    not_in_ball,
    invalid_argument,
};

inline const char* name(errc e)
{
    switch (e) {
    case errc::invalid_rank: return "InvalidRank";
    case errc::not_a_root: return "NotARoot";
    case errc::proportional_pair: return "ProportionalPair";
    case errc::non_integral_pairing: return "NonIntegralPairing";
    case errc::budget_exceeded: return "BudgetExceeded";
    case errc::level_mismatch: return "LevelMismatch";
    case errc::not_a_wall: return "NotAWall";
    case errc::not_type_a2n: return "NotTypeA2n";
    case errc::unsupported_sigma: return "UnsupportedSigma";
    case errc::half_integrality_violation: return "HalfIntegralityViolation";
    case errc::unsupported_panel: return "UnsupportedPanel";
    case errc::not_harmonic_base: return "NotHarmonicBase";
    case errc::not_applicable: return "NotApplicable";
    case errc::domain_error: return "DomainError";
    case errc::not_in_ball: return "NotInBall";
    case errc::invalid_argument: return "InvalidArgument";
    }
    return "Unknown";
}

class error : public std::runtime_error {
public:
    error(errc code, const std::string& what)
        : std::runtime_error(std::string(name(code)) + ": " + what), code_(code) {}
    errc code() const noexcept { return code_; }

private:
    errc code_;
};

/// Enumeration cap, overridable through STEINBERG_BUDGET.
inline std::size_t budget()
{
    if (const char* s = std::getenv("STEINBERG_BUDGET")) {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(s, &end, 10);
        if (end != s && v > 0) return static_cast<std::size_t>(v);
    }
    return 5'000'000;
}

} // namespace steinberg
