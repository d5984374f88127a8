#pragma once

#include <cstdlib>
#include <deque>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include "steinberg/rootsys.hpp"
#include "steinberg/sorth.hpp"

namespace steinberg {

enum class level { E, F };

/// h(alpha) = 2 f(alpha) for every root, indexed like root_system::roots().
struct chamber {
    level lvl = level::E;
    std::vector<int> h;

    friend bool operator==(const chamber&, const chamber&) = default;
    friend auto operator<=>(const chamber&, const chamber&) = default;
};

struct wall {
    int alpha;  // positive root index
    int c;      // half-units
};

struct facet_wall {
    wall w;
    chamber across;
};

inline int level_sum(level l) { return l == level::E ? 1 : 2; }

inline bool is_concave(const root_system& sys, const std::vector<int>& h)
{
    for (int a = 0; a < sys.size(); ++a) {
        if (h[a] + h[sys.neg(a)] < 0) return false;
        for (int b = 0; b < sys.size(); ++b) {
            const int c = sys.add(a, b);
            if (c >= 0 && h[c] > h[a] + h[b]) return false;
        }
    }
    return true;
}

inline bool is_chamber(const root_system& sys, const chamber& c)
{
    for (int a = 0; a < sys.size(); ++a) {
        if (c.h[a] + c.h[sys.neg(a)] != level_sum(c.lvl)) return false;
        if (c.lvl == level::F && c.h[a] % 2 != 0) return false;
    }
    return is_concave(sys, c.h);
}

/// (C_{0,F}, C_{0,E}).
inline std::pair<chamber, chamber> base_chambers(const root_system& sys)
{
    chamber f{level::F, std::vector<int>(sys.size())}, e{level::E, std::vector<int>(sys.size())};
    for (int a = 0; a < sys.size(); ++a) {
        f.h[a] = sys.positive(a) ? 0 : 2;
        e.h[a] = sys.positive(a) ? 0 : 1;
    }
    return {f, e};
}

inline int distance(const root_system& sys, const chamber& a, const chamber& b)
{
    if (a.lvl != b.lvl) throw error(errc::level_mismatch, "chambers at different levels");
    int s = 0;
    for (int r = 0; r < sys.size(); ++r)
        if (sys.positive(r)) s += std::abs(a.h[r] - b.h[r]);
    return a.lvl == level::E ? s : s / 2;
}

/// h(alpha) += 2 <alpha, xi> for an integral coweight xi (simple-coroot coordinates).
inline chamber translate(const root_system& sys, chamber c, std::span<const int> xi)
{
    for (int a = 0; a < sys.size(); ++a) {
        int p = 0;
        for (int k = 0; k < sys.rank(); ++k) p += xi[k] * sys.pair(a, sys.simple(k));
        c.h[a] += 2 * p;
    }
    return c;
}

/// Affine reflection in the wall {alpha, c}: h'(beta) = h(s_alpha beta) - c <beta, alpha^vee>.
inline chamber reflect(const root_system& sys, const chamber& c, wall w)
{
    if (w.alpha < 0 || w.alpha >= sys.size()) throw error(errc::not_a_root, "wall root out of range");
    if (c.lvl == level::F && w.c % 2 != 0) throw error(errc::not_a_wall, "F-level walls sit at even half-units");
    chamber out{c.lvl, std::vector<int>(sys.size())};
    for (int b = 0; b < sys.size(); ++b) out.h[b] = c.h[sys.reflect(b, w.alpha)] - w.c * sys.pair(b, w.alpha);
    return out;
}

/// The walls of c with the chamber across each.
inline std::vector<facet_wall> walls(const root_system& sys, const chamber& c)
{
    std::vector<facet_wall> out;
    for (int a = 0; a < sys.size(); ++a) {
        if (!sys.positive(a)) continue;
        for (int v : {-c.h[a], c.h[sys.neg(a)]}) {
            if (c.lvl == level::F && v % 2 != 0) continue;
            chamber g = reflect(sys, c, {a, v});
            if (distance(sys, c, g) == 1) out.push_back({{a, v}, std::move(g)});
        }
    }
    return out;
}

/// Root of the half-apartment bounding c along w, pointing into c.
inline int wall_root(const root_system& sys, const chamber& c, wall w)
{
    return w.c == -c.h[w.alpha] ? w.alpha : sys.neg(w.alpha);
}

/// Extended simple set of a chamber: the d+1 roots bounding it.
inline std::vector<int> chamber_simple_set(const root_system& sys, const chamber& c)
{
    std::vector<int> out;
    for (const auto& fw : walls(sys, c)) out.push_back(wall_root(sys, c, fw.w));
    std::sort(out.begin(), out.end());
    return out;
}

struct ball_entry {
    chamber c;
    int dist;
};

/// Chambers at gallery distance <= R, in BFS order.
inline std::vector<ball_entry> chambers_within(const root_system& sys, const chamber& c0, int R)
{
    std::vector<ball_entry> out{{c0, 0}};
    std::set<std::vector<int>> seen{c0.h};
    std::size_t lo = 0;
    const std::size_t cap = budget();
    for (int d = 1; d <= R; ++d) {
        const std::size_t hi = out.size();
        for (std::size_t i = lo; i < hi; ++i)
            for (auto& fw : walls(sys, out[i].c))
                if (seen.insert(fw.across.h).second) {
                    out.push_back({std::move(fw.across), d});
                    if (out.size() > cap) throw error(errc::budget_exceeded, "chamber ball");
                }
        lo = hi;
    }
    return out;
}

/// Walls crossed on a geodesic from c to the base chamber of its level.
inline std::vector<wall> gallery_to_base(const root_system& sys, chamber c)
{
    const auto [bf, be] = base_chambers(sys);
    const chamber& target = c.lvl == level::F ? bf : be;
    std::vector<wall> out;
    int d = distance(sys, c, target);
    while (d > 0) {
        bool moved = false;
        for (auto& fw : walls(sys, c)) {
            const int nd = distance(sys, fw.across, target);
            if (nd < d) {
                out.push_back(fw.w);
                c = std::move(fw.across);
                d = nd;
                moved = true;
                break;
            }
        }
        if (!moved) throw error(errc::domain_error, "no descending wall");
    }
    return out;
}

/// Carry a chamber along the reflections that take C_{0,F} to cf.
inline chamber transport_from_base(const root_system& sys, const chamber& cf, chamber x)
{
    const auto path = gallery_to_base(sys, cf);
    for (auto it = path.rbegin(); it != path.rend(); ++it) x = reflect(sys, x, *it);
    return x;
}

inline bool inside(const chamber& e, const chamber& f)
{
    for (std::size_t i = 0; i < e.h.size(); ++i)
        if (e.h[i] > f.h[i]) return false;
    return true;
}

inline std::vector<chamber> e_chambers_in_f_chamber(const root_system& sys, const chamber& cf)
{
    if (cf.lvl != level::F) throw error(errc::level_mismatch, "expected an F-chamber");
    const chamber seed = transport_from_base(sys, cf, base_chambers(sys).second);
    std::set<chamber> seen{seed};
    std::deque<chamber> todo{seed};
    while (!todo.empty()) {
        chamber c = std::move(todo.front());
        todo.pop_front();
        for (auto& fw : walls(sys, c))
            if (inside(fw.across, cf) && seen.insert(fw.across).second) todo.push_back(std::move(fw.across));
    }
    return {seen.begin(), seen.end()};
}

/// Every wall of c sits at an odd half-unit level.
inline bool is_central(const root_system& sys, const chamber& c)
{
    for (const auto& fw : walls(sys, c))
        if (fw.w.c % 2 == 0) return false;
    return true;
}

inline std::vector<chamber> central_chambers_bruteforce(const root_system& sys, const chamber& cf)
{
    std::vector<chamber> out;
    for (auto& c : e_chambers_in_f_chamber(sys, cf))
        if (is_central(sys, c)) out.push_back(c);
    return out;
}

/// sigma(2i) = i, sigma(2i+1) = n+i+1 on positions 1..2n+1.
inline chamber central_chamber(const root_system& sys, const chamber& cf)
{
    const auto t = sys.type();
    if (!is_a_even(t)) throw error(errc::not_type_a2n, t.name() + " has no central chambers");
    const int n = t.rank / 2, m = t.rank + 1;
    std::vector<int> sigma(m + 1);
    for (int p = 1; p <= m; ++p) sigma[p] = p % 2 == 0 ? p / 2 : n + (p - 1) / 2 + 1;
    chamber c{level::E, std::vector<int>(sys.size())};
    for (int i = 1; i <= m; ++i)
        for (int j = i + 1; j <= m; ++j) {
            int v = 0;
            if (i % 2 == 0 && j % 2 == 1) v = -1;
            if (i % 2 == 1 && j % 2 == 0) v = 1;
            const int a = sigma[i], b = sigma[j];
            root_vec r(t.rank, 0);
            for (int k = std::min(a, b); k < std::max(a, b); ++k) r[k - 1] = a < b ? 1 : -1;
            const int idx = sys.index(r);
            c.h[idx] = v;
            c.h[sys.neg(idx)] = 1 - v;
        }
    return transport_from_base(sys, cf, c);
}

/// Weighted sum over the bounding roots with the relation normalized to coprime positive integers.
inline rational simple_set_weighted_sum(const root_system& sys, const chamber& c)
{
    const auto roots = chamber_simple_set(sys, c);
    const int n = sys.rank();
    rational_matrix a(n, std::vector<rational>(n));
    std::vector<rational> rhs(n);
    for (int k = 0; k < n; ++k) {
        for (int i = 0; i < n; ++i) a[k][i] = sys.root(roots[i + 1])[k];
        rhs[k] = -sys.root(roots[0])[k];
    }
    auto sol = *solve(a, rhs);
    std::vector<rational> lam{rational(1)};
    lam.insert(lam.end(), sol.begin(), sol.end());
    bigint l = 1;
    for (auto& x : lam) l = boost::multiprecision::lcm(l, den(x));
    bigint g = 0;
    for (auto& x : lam) {
        x *= l;
        g = boost::multiprecision::gcd(g, num(x));
    }
    rational s = 0;
    for (std::size_t i = 0; i < lam.size(); ++i) s += lam[i] / g * c.h[roots[i]];
    return s / 2;
}

/// Canonical chamber for a tabled Sigma_a: H(alpha) = -h(alpha), H(-alpha) = h(alpha) + 1 for alpha > 0.
inline chamber canonical_sigma_chamber(const root_system& sys, const so_set& sigma)
{
    const auto key = canonical_set(sys, sigma, true);
    bool tabled = false;
    if (!is_a_even(sys.type())) {
        tabled = key == canonical_set(sys, sigma_table(sys), true);
        if (has_alternative_table(sys.type()))
            tabled = tabled || key == canonical_set(sys, sigma_table(sys, true), true);
    }
    if (!tabled) throw error(errc::unsupported_sigma, "Sigma_a is not in tabled form");
    const bool long_only = !sys.simply_laced() &&
                           std::all_of(sigma.begin(), sigma.end(), [&](int b) { return sys.is_long(b); });
    chamber c{level::E, std::vector<int>(sys.size())};
    for (int a = 0; a < sys.size(); ++a) {
        if (!sys.positive(a)) continue;
        int h = 0;
        for (int k = 0; k < sys.rank(); ++k)
            if (!long_only || sys.is_long(sys.simple(k))) h += sys.root(a)[k];
        c.h[a] = -h;
        c.h[sys.neg(a)] = h + 1;
    }
    return c;
}

/// Linear functional on the span of a full-rank SO set, given on its members in f-units.
class facet_functional {
public:
    facet_functional(const root_system& sys, so_set sigma, std::vector<rational> values)
        : sys_(&sys), sigma_(std::move(sigma)), values_(std::move(values))
    {
        if (static_cast<int>(sigma_.size()) != sys.rank())
            throw error(errc::invalid_argument, "facet functional needs a full-rank SO set");
        for (const auto& v : values_)
            if (!is_integer(2 * v)) throw error(errc::invalid_argument, "values must lie in 1/2 Z");
        for (int a = 0; a < sys.size(); ++a) {
            const rational v = (*this)(a);
            if (!is_integer(2 * v))
                throw error(errc::half_integrality_violation, "f'(root " + std::to_string(a) + ") = " + to_string(v));
        }
    }

    /// Coefficients lambda_i = <alpha, beta_i^vee> / 2.
    std::vector<rational> coefficients(int a) const
    {
        std::vector<rational> out;
        for (int b : sigma_) out.emplace_back(sys_->pair(a, b), 2);
        return out;
    }

    rational operator()(int a) const
    {
        const auto lam = coefficients(a);
        rational s = 0;
        for (std::size_t i = 0; i < lam.size(); ++i) s += lam[i] * values_[i];
        return s;
    }

private:
    const root_system* sys_;
    so_set sigma_;
    std::vector<rational> values_;
};

/// f_D(beta_i) = f_{C0}(beta_i) - 1/2 for the canonical chamber.
inline std::vector<rational> facet_values(const so_set& sigma, const chamber& c0)
{
    std::vector<rational> out;
    for (int b : sigma) out.emplace_back(c0.h[b] - 1, 2);
    return out;
}

} // namespace steinberg
