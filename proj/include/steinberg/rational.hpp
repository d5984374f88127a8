#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace steinberg {

using bigint = boost::multiprecision::cpp_int;
using rational = boost::multiprecision::cpp_rational;

inline bigint num(const rational& r) { return boost::multiprecision::numerator(r); }
inline bigint den(const rational& r) { return boost::multiprecision::denominator(r); }

inline bool is_integer(const rational& r) { return den(r) == 1; }

/// "p/q" in lowest terms, always with a denominator.
inline std::string to_string(const rational& r)
{
    return num(r).str() + "/" + den(r).str();
}

/// Exact r^e for integer e (negative exponents allowed when r != 0).
inline rational pow(rational r, long e)
{
    if (e < 0) {
        r = 1 / r;
        e = -e;
    }
    rational out = 1;
    while (e > 0) {
        if (e & 1) out *= r;
        r *= r;
        e >>= 1;
    }
    return out;
}

inline rational abs(const rational& r) { return r < 0 ? rational(-r) : r; }

using rational_matrix = std::vector<std::vector<rational>>;

/// Solves A x = b over Q. Returns nullopt when A is singular.
inline std::optional<std::vector<rational>> solve(rational_matrix a, std::vector<rational> b)
{
    const std::size_t n = a.size();
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && a[p][c] == 0) ++p;
        if (p == n) return std::nullopt;
        std::swap(a[p], a[c]);
        std::swap(b[p], b[c]);
        const rational inv = 1 / a[c][c];
        for (auto& x : a[c]) x *= inv;
        b[c] *= inv;
        for (std::size_t r = 0; r < n; ++r) {
            if (r == c || a[r][c] == 0) continue;
            const rational k = a[r][c];
            for (std::size_t j = 0; j < n; ++j) a[r][j] -= k * a[c][j];
            b[r] -= k * b[c];
        }
    }
    return b;
}

} // namespace steinberg
