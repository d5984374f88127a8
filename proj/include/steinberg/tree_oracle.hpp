#pragma once

#include <cstdint>
#include <deque>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "steinberg/cochain.hpp"

namespace steinberg {

/// Ball of radius R around the base chamber in the (q+1)-regular tree.
/// Vertices are panels, edges are chambers. Vertex 0 and 1 span the base chamber;
/// chamber id u-1 is the edge (parent[u], u).
struct tree_ball {
    long q = 3;
    int radius = 0;
    std::vector<int> parent;
    std::vector<int> layer;
    std::vector<int> depth;
    std::vector<int> first_child;

    int vertices() const { return static_cast<int>(parent.size()); }
    int chambers() const { return vertices() - 1; }
    static constexpr int base = 0;

    int child_count(int v) const { return first_child[v] < 0 ? 0 : static_cast<int>(q); }
    bool interior(int v) const { return layer[v] < radius; }

    /// The two endpoints of chamber c.
    std::pair<int, int> ends(int c) const { return {parent[c + 1], c + 1}; }

    /// Calls f on each chamber containing panel v.
    template <class F>
    void for_star(int v, F&& f) const
    {
        f(v == 0 ? 0 : v - 1);
        for (int k = 0; k < child_count(v); ++k) f(first_child[v] + k - 1);
    }

    std::vector<int> star(int v) const
    {
        std::vector<int> out;
        for_star(v, [&](int c) { out.push_back(c); });
        return out;
    }
};

inline tree_ball build_ball(long q, int R)
{
    require_odd_q(q);
    if (R < 0 || R > 12) throw error(errc::invalid_argument, "radius must lie in [0, 12]");
    long double total = 2;
    long double shell = 2;
    for (int r = 1; r <= R; ++r) total += (shell *= q);
    if (total > static_cast<long double>(budget())) throw error(errc::budget_exceeded, "tree ball has " + std::to_string(static_cast<long long>(total)) + " panels");

    tree_ball b;
    b.q = q;
    b.radius = R;
    b.parent = {-1, 0};
    b.layer = {0, 0};
    b.depth = {0, 1};
    b.first_child = {-1, -1};
    for (int v = 0; v < b.vertices(); ++v) {
        if (b.layer[v] >= R) continue;
        b.first_child[v] = b.vertices();
        for (long k = 0; k < q; ++k) {
            b.parent.push_back(v);
            b.layer.push_back(b.layer[v] + 1);
            b.depth.push_back(b.depth[v] + 1);
            b.first_child.push_back(-1);
        }
    }
    return b;
}

namespace detail {

inline void require_chamber(const tree_ball& b, int c)
{
    if (c < 0 || c >= b.chambers()) throw error(errc::not_in_ball, "chamber " + std::to_string(c));
}

inline int vertex_distance(const tree_ball& b, int u, int v)
{
    int d = 0;
    while (u != v) {
        if (b.depth[u] >= b.depth[v]) u = b.parent[u];
        else v = b.parent[v];
        ++d;
    }
    return d;
}

/// Distances from every panel to the nearest endpoint of chamber c.
inline std::vector<int> panel_distances(const tree_ball& b, int c)
{
    std::vector<int> dist(b.vertices(), -1);
    std::deque<int> queue;
    const auto [x, y] = b.ends(c);
    for (int s : {x, y}) {
        dist[s] = 0;
        queue.push_back(s);
    }
    while (!queue.empty()) {
        const int v = queue.front();
        queue.pop_front();
        auto visit = [&](int w) {
            if (w >= 0 && dist[w] < 0) {
                dist[w] = dist[v] + 1;
                queue.push_back(w);
            }
        };
        visit(b.parent[v]);
        if (v == 0) visit(1);
        for (int k = 0; k < b.child_count(v); ++k) visit(b.first_child[v] + k);
    }
    return dist;
}

inline std::int64_t ipow(std::int64_t q, int e)
{
    std::int64_t r = 1;
    for (int i = 0; i < e; ++i) {
        if (r > std::numeric_limits<std::int64_t>::max() / q) throw error(errc::budget_exceeded, "scaled sum overflows");
        r *= q;
    }
    return r;
}

} // namespace detail

inline int tree_distance(const tree_ball& b, int c1, int c2)
{
    detail::require_chamber(b, c1);
    detail::require_chamber(b, c2);
    if (c1 == c2) return 0;
    const auto [a1, b1] = b.ends(c1);
    const auto [a2, b2] = b.ends(c2);
    return 1 + std::min({detail::vertex_distance(b, a1, a2), detail::vertex_distance(b, a1, b2),
                         detail::vertex_distance(b, b1, a2), detail::vertex_distance(b, b1, b2)});
}

/// Gallery distance from the base chamber.
inline int base_distance(const tree_ball& b, int c)
{
    detail::require_chamber(b, c);
    return b.layer[c + 1];
}

/// Chamber on the axis at signed offset n from the base.
inline int axis_chamber(const tree_ball& b, int n)
{
    if (n == 0) return tree_ball::base;
    if (std::abs(n) > b.radius) throw error(errc::not_in_ball, "axis offset " + std::to_string(n));
    int v = n > 0 ? 0 : 1;
    for (int i = 0; i < std::abs(n); ++i) v = b.first_child[v];
    return v - 1;
}

struct tree_report {
    std::size_t checked = 0;
    std::size_t failed = 0;
    std::string first_failure;

    bool ok() const { return failed == 0; }

    template <class Describe>
    void record(bool pass, Describe&& what)
    {
        ++checked;
        if (!pass && failed++ == 0) first_failure = what();
    }
};

/// For every interior panel D and every chamber C' within r_inner of the base,
/// sum over C containing D of (-q)^{-d(C, C')} is zero.
inline tree_report verify_hctest(const tree_ball& b, int r_inner)
{
    if (r_inner < 0 || r_inner + 1 > b.radius) throw error(errc::invalid_argument, "need r_inner + 1 <= radius");
    tree_report rep;
    const int dmax = 2 * b.radius + 1;
    std::vector<std::int64_t> scaled(dmax + 1);
    for (int d = 0; d <= dmax; ++d) scaled[d] = (d % 2 == 0 ? 1 : -1) * detail::ipow(b.q, dmax - d);
    for (int cp = 0; cp < b.chambers(); ++cp) {
        if (b.layer[cp + 1] > r_inner) continue;
        const auto dv = detail::panel_distances(b, cp);
        for (int v = 0; v < b.vertices(); ++v) {
            if (!b.interior(v)) continue;
            std::int64_t s = 0;
            b.for_star(v, [&](int c) {
                const auto [x, y] = b.ends(c);
                s += scaled[c == cp ? 0 : std::min(dv[x], dv[y]) + 1];
            });
            rep.record(s == 0, [&] { return "panel " + std::to_string(v) + " against chamber " + std::to_string(cp); });
        }
    }
    return rep;
}

inline int legendre_symbol(long k, long q)
{
    long r = 1;
    long base = k % q;
    for (long e = (q - 1) / 2; e > 0; e >>= 1) {
        if (e & 1) r = r * base % q;
        base = base * base % q;
    }
    return r == 1 ? 1 : -1;
}

inline bool is_prime(long q)
{
    for (long p = 2; p * p <= q; ++p)
        if (q % p == 0) return false;
    return q >= 2;
}

/// Values on the star of panel 0 in the order base, axis, then the remaining q-1 chambers.
inline std::vector<rational> legendre_base(const tree_ball& b)
{
    require_odd_q(b.q);
    if (b.radius < 1) throw error(errc::invalid_argument, "radius must be at least 1");
    std::vector<rational> out{0, 0};
    for (long k = 1; k < b.q; ++k) {
        if (is_prime(b.q)) out.emplace_back(legendre_symbol(k, b.q));
        else out.emplace_back(k <= (b.q - 1) / 2 ? 1 : -1);
    }
    return out;
}

/// Iwahori vector of the base chamber restricted to the star of panel 0.
inline std::vector<rational> iwahori_base(const tree_ball& b)
{
    std::vector<rational> out{1};
    for (long k = 0; k < b.q; ++k) out.push_back(rational(-1, b.q));
    return out;
}

namespace detail {

/// Slot of the star at panel 0 that chamber c projects to, and the distance to it.
inline std::pair<int, int> projection(const tree_ball& b, int c)
{
    int u = c + 1;
    while (b.depth[u] > 1) u = b.parent[u];
    return {u == 1 ? 0 : u - b.first_child[0] + 1, b.depth[c + 1] - 1};
}

struct scaled_values {
    std::vector<std::int64_t> v;
    rational scale;
};

inline scaled_values scaled_extension(const tree_ball& b, std::span<const rational> star)
{
    if (static_cast<long>(star.size()) != b.q + 1) throw error(errc::invalid_argument, "star needs q + 1 values");
    rational s = 0;
    for (const auto& x : star) s += x;
    if (s != 0) throw error(errc::not_harmonic_base, "star sum is " + to_string(s));
    bigint lcm = 1;
    for (const auto& x : star) lcm = boost::multiprecision::lcm(lcm, den(x));
    scaled_values out{{}, rational(lcm) * pow(rational(b.q), b.radius)};
    std::vector<std::vector<std::int64_t>> table(star.size(), std::vector<std::int64_t>(b.radius + 1));
    for (std::size_t k = 0; k < star.size(); ++k)
        for (int d = 0; d <= b.radius; ++d) {
            const rational x = star[k] * iwahori_weight(b.q, d) * out.scale;
            if (!is_integer(x) || abs(x) > rational(std::numeric_limits<std::int64_t>::max() / (b.q + 1)))
                throw error(errc::budget_exceeded, "scaled value out of range");
            table[k][d] = static_cast<std::int64_t>(num(x));
        }
    out.v.resize(b.chambers());
    for (int c = 0; c < b.chambers(); ++c) {
        const auto [slot, d] = projection(b, c);
        out.v[c] = table[slot][d];
    }
    return out;
}

} // namespace detail

/// Extension of star values at panel 0 by (-q)^{-d} from the projection onto the star.
inline std::vector<rational> extend(const tree_ball& b, std::span<const rational> star)
{
    const auto sv = detail::scaled_extension(b, star);
    std::vector<rational> out(b.chambers());
    for (int c = 0; c < b.chambers(); ++c) out[c] = rational(sv.v[c]) / sv.scale;
    return out;
}

inline tree_report verify_extension(const tree_ball& b, std::span<const rational> star)
{
    const auto sv = detail::scaled_extension(b, star);
    tree_report rep;
    for (int v = 0; v < b.vertices(); ++v) {
        if (!b.interior(v)) continue;
        std::int64_t s = 0;
        b.for_star(v, [&](int c) { s += sv.v[c]; });
        rep.record(s == 0, [&] { return "panel " + std::to_string(v); });
    }
    return rep;
}

/// sum over chambers at distance n from the base of |f(C)|, for n = 0..radius.
inline std::vector<rational> shell_abs_sums(const tree_ball& b, std::span<const rational> values)
{
    std::vector<rational> out(b.radius + 1);
    for (int c = 0; c < b.chambers(); ++c) out[base_distance(b, c)] += abs(values[c]);
    return out;
}

/// Shell sums of the extension of star values, computed on scaled integers.
inline std::vector<rational> extension_shell_sums(const tree_ball& b, std::span<const rational> star)
{
    const auto sv = detail::scaled_extension(b, star);
    std::vector<std::int64_t> acc(b.radius + 1, 0);
    for (int c = 0; c < b.chambers(); ++c) acc[base_distance(b, c)] += sv.v[c] < 0 ? -sv.v[c] : sv.v[c];
    std::vector<rational> out;
    for (auto x : acc) out.push_back(rational(x) / sv.scale);
    return out;
}

inline std::vector<rational> iwahori_values(const tree_ball& b)
{
    std::vector<rational> out(b.chambers());
    for (int c = 0; c < b.chambers(); ++c) out[c] = iwahori_weight(b.q, base_distance(b, c));
    return out;
}

} // namespace steinberg
