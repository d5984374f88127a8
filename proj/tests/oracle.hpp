#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <vector>

#include "steinberg/rootsys.hpp"

namespace oracle {

/// Ambient vectors scaled by 2 so that E8 and F4 stay integral.
using amb = std::vector<long>;

inline amb e(int dim, std::initializer_list<std::pair<int, int>> terms)
{
    amb v(dim, 0);
    for (auto [coef, i] : terms) v[i - 1] += 2 * coef;
    return v;
}

inline long dot(const amb& a, const amb& b)
{
    long s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

/// Simple roots in ambient coordinates, Bourbaki plates.
inline std::vector<amb> simple_roots(steinberg::root_system_type t)
{
    const int d = t.rank;
    std::vector<amb> s;
    switch (t.family) {
    case 'A':
        for (int i = 1; i <= d; ++i) s.push_back(e(d + 1, {{1, i}, {-1, i + 1}}));
        break;
    case 'B':
    case 'C':
    case 'D':
        for (int i = 1; i < d; ++i) s.push_back(e(d, {{1, i}, {-1, i + 1}}));
        if (t.family == 'B') s.push_back(e(d, {{1, d}}));
        if (t.family == 'C') s.push_back(e(d, {{2, d}}));
        if (t.family == 'D') s.push_back(e(d, {{1, d - 1}, {1, d}}));
        break;
    case 'G':
        s = {e(3, {{1, 1}, {-1, 2}}), e(3, {{-2, 1}, {1, 2}, {1, 3}})};
        break;
    case 'F':
        s = {e(4, {{1, 2}, {-1, 3}}), e(4, {{1, 3}, {-1, 4}}), e(4, {{1, 4}}), amb{1, -1, -1, -1}};
        break;
    case 'E': {
        std::vector<amb> e8 = {amb{1, -1, -1, -1, -1, -1, -1, 1},
                               e(8, {{1, 1}, {1, 2}}),
                               e(8, {{-1, 1}, {1, 2}}),
                               e(8, {{-1, 2}, {1, 3}}),
                               e(8, {{-1, 3}, {1, 4}}),
                               e(8, {{-1, 4}, {1, 5}}),
                               e(8, {{-1, 5}, {1, 6}}),
                               e(8, {{-1, 6}, {1, 7}})};
        s.assign(e8.begin(), e8.begin() + d);
        break;
    }
    }
    return s;
}

/// Closure of the simple roots under their reflections.
inline std::set<amb> closure(const std::vector<amb>& simple)
{
    std::set<amb> seen(simple.begin(), simple.end());
    std::vector<amb> todo(simple.begin(), simple.end());
    while (!todo.empty()) {
        amb v = todo.back();
        todo.pop_back();
        for (const auto& a : simple) {
            const long c = 2 * dot(v, a) / dot(a, a);
            amb w = v;
            for (std::size_t i = 0; i < w.size(); ++i) w[i] -= c * a[i];
            if (seen.insert(w).second) todo.push_back(w);
        }
    }
    return seen;
}

inline amb to_ambient(const std::vector<amb>& simple, const std::vector<int>& coeffs)
{
    amb v(simple.front().size(), 0);
    for (std::size_t k = 0; k < coeffs.size(); ++k)
        for (std::size_t i = 0; i < v.size(); ++i) v[i] += coeffs[k] * simple[k][i];
    return v;
}

/// <a, b^vee> from ambient coordinates.
inline long pairing(const amb& a, const amb& b) { return 2 * dot(a, b) / dot(b, b); }

/// Half the sum of the positive roots, in simple-root coordinates.
inline std::vector<steinberg::rational> rho_halfsum(const steinberg::root_system& sys)
{
    std::vector<steinberg::rational> r(sys.rank(), steinberg::rational(0));
    for (int b : sys.positive_roots())
        for (int k = 0; k < sys.rank(); ++k) r[k] += sys.root(b)[k];
    for (auto& x : r) x /= 2;
    return r;
}

inline std::vector<steinberg::root_system_type> all_types(int max_rank = 8)
{
    std::vector<steinberg::root_system_type> out;
    for (int d = 1; d <= max_rank; ++d) out.push_back({'A', d});
    for (int d = 2; d <= max_rank; ++d) out.push_back({'B', d});
    for (int d = 2; d <= max_rank; ++d) out.push_back({'C', d});
    for (int d = 3; d <= max_rank; ++d) out.push_back({'D', d});
    for (int d : {6, 7, 8})
        if (d <= max_rank) out.push_back({'E', d});
    if (max_rank >= 4) out.push_back({'F', 4});
    if (max_rank >= 2) out.push_back({'G', 2});
    return out;
}

/// The eighteen systems of the tables.
inline std::vector<steinberg::root_system_type> table_types()
{
    return {{'A', 1}, {'A', 3}, {'A', 5}, {'B', 2}, {'B', 3}, {'B', 4}, {'B', 5}, {'C', 2}, {'C', 3},
            {'C', 4}, {'D', 4}, {'D', 5}, {'D', 6}, {'E', 6}, {'E', 7}, {'E', 8}, {'F', 4}, {'G', 2}};
}

} // namespace oracle
