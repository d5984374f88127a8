#pragma once

#include <optional>
#include <vector>

#include "steinberg/rootsys.hpp"

namespace steinberg {

/// rho in simple-root coordinates from <rho, alpha_i^vee> = 1.
inline std::vector<rational> rho_from_cartan(const root_system& sys)
{
    const int n = sys.rank();
    rational_matrix a(n, std::vector<rational>(n));
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) a[i][k] = sys.cartan()[i][k];
    return *solve(a, std::vector<rational>(n, rational(1)));
}

inline bool prasad_trivial(const root_system& sys)
{
    auto rho = rho_from_cartan(sys);
    return std::all_of(rho.begin(), rho.end(), [](const rational& x) { return is_integer(x); });
}

inline rational two_rho_pairing(const root_system& sys, const coweight& xi)
{
    std::vector<rational> two_rho = sys.rho();
    for (auto& x : two_rho) x *= 2;
    return sys.pairing(two_rho, xi);
}

/// (-1)^{<2rho, xi>} on a nonsquare, +1 on a square.
inline int chi_on_torus(const root_system& sys, const coweight& xi, bool nonsquare)
{
    const rational p = two_rho_pairing(sys, xi);
    if (!is_integer(p))
        throw error(errc::non_integral_pairing, "<2rho, xi> = " + to_string(p));
    if (!nonsquare) return 1;
    return num(p) % 2 == 0 ? 1 : -1;
}

/// Parity of 2rho for D_{2n} from the closed coefficient formula, compared
/// against the computed 2rho and the predicted branch. nullopt for n = 1.
inline std::optional<bool> d2n_character_identity(int n)
{
    if (n < 2) return std::nullopt;
    const int d = 2 * n;
    root_system sys({'D', d});
    std::vector<int> formula(d);
    for (int i = 1; i <= d - 2; ++i) formula[i - 1] = (4 * n * i - i * (i - 1)) % 2;
    formula[d - 2] = formula[d - 1] = (n * (2 * n - 1)) % 2;
    for (int k = 0; k < d; ++k) {
        const rational two = 2 * sys.rho()[k];
        if (!is_integer(two) || static_cast<int>(num(two) % 2) != formula[k]) return false;
    }
    for (int k = 0; k < d; ++k) {
        const int expected = (n % 2 == 1 && k >= d - 2) ? 1 : 0;
        if (formula[k] != expected) return false;
    }
    return true;
}

} // namespace steinberg
