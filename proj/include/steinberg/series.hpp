#pragma once

#include <vector>

#include "steinberg/apartment.hpp"
#include "steinberg/cochain.hpp"

namespace steinberg {

using power_series = std::vector<bigint>;

namespace detail {

inline power_series mul(const power_series& a, const power_series& b, int N)
{
    power_series out(N + 1, bigint(0));
    for (std::size_t i = 0; i < a.size() && static_cast<int>(i) <= N; ++i)
        for (std::size_t j = 0; j < b.size() && static_cast<int>(i + j) <= N; ++j) out[i + j] += a[i] * b[j];
    return out;
}

/// 1 / (1 - x^m) truncated at degree N.
inline power_series geometric(int m, int N)
{
    power_series out(N + 1, bigint(0));
    for (int k = 0; k <= N; k += m) out[k] = 1;
    return out;
}

/// 1 + x + ... + x^m
inline power_series block(int m)
{
    return power_series(m + 1, bigint(1));
}

} // namespace detail

/// prod_i (1 - x^{m_i+1}) / ((1 - x)(1 - x^{m_i})) over the exponents.
inline power_series poincare_closed(const root_system& sys, int N)
{
    power_series out{bigint(1)};
    out.resize(N + 1, bigint(0));
    for (int m : sys.exponents()) {
        out = detail::mul(out, detail::block(m), N);
        out = detail::mul(out, detail::geometric(m, N), N);
    }
    return out;
}

/// (1 - x^{d+1}) / (1 - x)^{d+1}, the type A_d closed form.
inline power_series poincare_type_a(int d, int N)
{
    power_series out = detail::block(d);
    out.resize(N + 1, bigint(0));
    for (int k = 0; k < d; ++k) out = detail::mul(out, detail::geometric(1, N), N);
    return out;
}

inline power_series poincare_bfs(const root_system& sys, int N)
{
    power_series out(N + 1, bigint(0));
    for (const auto& e : chambers_within(sys, base_chambers(sys).second, N)) out[e.dist] += 1;
    return out;
}

/// |W_0| = prod (m_i + 1).
inline bigint weyl_order(const root_system& sys)
{
    bigint w = 1;
    for (int m : sys.exponents()) w *= m + 1;
    return w;
}

/// (1 - x^{d+1}) / (1 - x)^{d+1}
inline rational s_value(int d, const rational& x)
{
    if (abs(x) >= 1) throw error(errc::domain_error, "s(x) needs |x| < 1");
    if (d < 0) throw error(errc::invalid_argument, "negative dimension");
    return (1 - pow(x, d + 1)) / pow(1 - x, d + 1);
}

inline bigint binomial(long n, long k)
{
    if (k < 0 || k > n) return 0;
    bigint b = 1;
    for (long i = 1; i <= k; ++i) b = b * (n - k + i) / i;
    return b;
}

/// q^{N0} |W_0| sum_{l > R} C(l+d-1, d-1) q^{-l}, in closed form.
inline rational tail_bound(const root_system& sys, long q, int R, int N0)
{
    if (q < 2) throw error(errc::invalid_argument, "q must be at least 2");
    const int d = sys.rank();
    const rational x(1, q);
    rational head = 0;
    for (int l = 0; l <= R; ++l) head += rational(binomial(l + d - 1, d - 1)) * pow(x, l);
    const rational total = pow(1 - x, -static_cast<long>(d));
    return pow(rational(q), N0) * rational(weyl_order(sys)) * (total - head);
}

struct lambda_report {
    std::vector<rational> partial_sums;
    std::vector<rational> tail_bounds;
    rational target = 1;
    int n0 = 3;

    bool certified(int r_min) const
    {
        for (std::size_t r = r_min; r < partial_sums.size(); ++r)
            if (abs(partial_sums[r] - target) > tail_bounds[r]) return false;
        return true;
    }
};

/// S_R = sum over F-chambers within R of q^{d_F} (-q)^{-d_E(C0, central)}.
inline lambda_report lambda_a2n_partial(int n, long q, int R)
{
    require_odd_q(q);
    if (n < 1) throw error(errc::invalid_argument, "n must be positive");
    root_system sys({'A', 2 * n});
    const auto [cf, ce] = base_chambers(sys);
    const chamber c0 = central_chamber(sys, cf);
    lambda_report rep;
    std::map<std::vector<int>, chamber> central{{cf.h, c0}};
    std::vector<chamber> frontier{cf};
    rational s = 1;
    rep.partial_sums.push_back(s);
    const std::size_t cap = budget();
    for (int d = 1; d <= R; ++d) {
        std::vector<chamber> next;
        for (const auto& f : frontier) {
            const chamber cen = central.at(f.h);
            for (auto& fw : walls(sys, f)) {
                if (central.contains(fw.across.h)) continue;
                chamber g = reflect(sys, cen, fw.w);
                s += pow(rational(q), d) * iwahori_weight(q, distance(sys, c0, g));
                central.emplace(fw.across.h, std::move(g));
                next.push_back(std::move(fw.across));
                if (central.size() > cap) throw error(errc::budget_exceeded, "lambda enumeration");
            }
        }
        frontier = std::move(next);
        rep.partial_sums.push_back(s);
    }
    for (int r = 0; r <= R; ++r) rep.tail_bounds.push_back(tail_bound(sys, q, r, rep.n0));
    return rep;
}

/// ch_da_count * s(d', q^{r2 - r1}); the count itself when the fixed apartment is a vertex.
inline rational lambda_tvoth(const root_system& sys, long q, long ch_da_count)
{
    const auto t = sys.type();
    if (is_a_even(t)) throw error(errc::not_applicable, t.name() + " is handled by the central-chamber sum");
    if (ch_da_count <= 0) throw error(errc::invalid_argument, "chamber count must be positive");
    require_odd_q(q);
    if (!has_alternative_table(t) || t.rank < 3) return rational(ch_da_count);
    const auto r = r1_r2(sys);
    return rational(ch_da_count) * s_value(r.dimension, pow(rational(q), r.r2 - r.r1));
}

} // namespace steinberg
