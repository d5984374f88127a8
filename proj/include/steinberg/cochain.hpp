#pragma once

#include <bit>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "steinberg/apartment.hpp"
#include "steinberg/prasad.hpp"
#include "steinberg/sorth.hpp"

namespace steinberg {

inline void require_odd_q(long q)
{
    if (q < 3 || q % 2 == 0) throw error(errc::invalid_argument, "q must be an odd integer >= 3");
}

/// (-q)^{-d}
inline rational iwahori_weight(long q, int d) { return pow(rational(-q), -static_cast<long>(d)); }

/// Exact values on a finite set of apartment chambers. Panel sums measure near/far
/// against the chambers in center.
struct cochain {
    std::map<std::vector<int>, rational> values;
    std::vector<chamber> center;
    long q = 3;
    bool retraction_invariant = false;

    rational at(const chamber& c) const
    {
        auto it = values.find(c.h);
        if (it == values.end()) throw error(errc::not_in_ball, "chamber outside the cochain support radius");
        return it->second;
    }
};

inline int distance_to_center(const root_system& sys, const std::vector<chamber>& center, const chamber& c)
{
    int best = -1;
    for (const auto& x : center) {
        const int d = distance(sys, x, c);
        if (best < 0 || d < best) best = d;
    }
    return best;
}

inline cochain iwahori_vector(const root_system& sys, const chamber& c0, long q, int radius)
{
    require_odd_q(q);
    cochain f;
    f.center = {c0};
    f.q = q;
    f.retraction_invariant = true;
    for (const auto& e : chambers_within(sys, c0, radius)) f.values.emplace(e.c.h, iwahori_weight(q, e.dist));
    return f;
}

/// A codimension-one facet of the apartment: the wall w of chamber c.
struct panel {
    chamber c;
    wall w;
};

/// f(near) + q f(far), the far apartment chamber standing for its q building images.
inline rational panel_sum(const root_system& sys, const panel& p, const cochain& f)
{
    if (!f.retraction_invariant) throw error(errc::unsupported_panel, "cochain not declared retraction-invariant");
    const chamber other = reflect(sys, p.c, p.w);
    const int da = distance_to_center(sys, f.center, p.c), db = distance_to_center(sys, f.center, other);
    if (da == db) throw error(errc::unsupported_panel, "panel equidistant from the center");
    const chamber& near = da < db ? p.c : other;
    const chamber& far = da < db ? other : p.c;
    return f.at(near) + rational(f.q) * f.at(far);
}

struct star_value {
    chamber c;
    rational value;
    long multiplicity = 1;
};

/// f(C) = (-q)^{-d(C, C0)} f0(C0), C0 the nearest star chamber.
inline cochain extend_by_harmonicity(const root_system& sys, const std::vector<star_value>& star, long q, int radius)
{
    require_odd_q(q);
    if (star.empty()) throw error(errc::not_harmonic_base, "empty star");
    rational s = 0;
    for (const auto& x : star) s += x.multiplicity * x.value;
    if (s != 0) throw error(errc::not_harmonic_base, "star sum " + to_string(s));
    cochain f;
    f.q = q;
    f.retraction_invariant = true;
    f.center = {star.front().c};
    for (const auto& e : chambers_within(sys, star.front().c, radius)) {
        int best = -1, arg = -1;
        bool tie = false;
        for (std::size_t i = 0; i < star.size(); ++i) {
            const int d = distance(sys, star[i].c, e.c);
            if (best < 0 || d < best) {
                best = d;
                arg = static_cast<int>(i);
                tie = false;
            } else if (d == best) {
                tie = true;
            }
        }
        if (tie && best > 0) throw error(errc::not_harmonic_base, "chamber with no unique projection");
        f.values.emplace(e.c.h, iwahori_weight(q, best) * star[arg].value);
    }
    return f;
}

/// Element of (Z/2)^r as a bitmask, bit i for e_{i+1}.
using sign_vector = std::uint32_t;

inline sign_vector basis_vector(int i) { return sign_vector{1} << i; }

inline sign_vector from_indices(std::initializer_list<int> one_based)
{
    sign_vector v = 0;
    for (int i : one_based) v |= basis_vector(i - 1);
    return v;
}

/// Character of (Z/2)^r; bit i set means chi(e_{i+1}) = -1.
struct sign_character {
    int r = 0;
    sign_vector minus = 0;

    int operator()(sign_vector v) const { return std::popcount(v & minus) % 2 == 0 ? 1 : -1; }
    int on_basis(int i) const { return (*this)(basis_vector(i)); }
    friend bool operator==(const sign_character&, const sign_character&) = default;
};

inline std::string format_sign_vector(sign_vector v, int r)
{
    if (v == 0) return "1";
    std::string s;
    for (int i = 0; i < r; ++i)
        if (v & basis_vector(i)) s += "e" + std::to_string(i + 1);
    return s;
}

inline std::string format_character(const sign_character& c)
{
    std::string s;
    for (int i = 0; i < c.r; ++i) s += (i ? "," : "") + std::string(c.on_basis(i) > 0 ? "+" : "-");
    return s;
}

/// bit j = <beta_j, xi> mod 2.
inline sign_vector coroot_action(const root_system& sys, const so_set& sigma, const coweight& xi)
{
    sign_vector v = 0;
    for (std::size_t j = 0; j < sigma.size(); ++j) {
        const rational p = sys.pairing(sigma[j], xi);
        if (!is_integer(p)) throw error(errc::non_integral_pairing, "<beta, xi> = " + to_string(p));
        if (num(p) % 2 != 0) v |= basis_vector(static_cast<int>(j));
    }
    return v;
}

inline int sign_rank(root_system_type t)
{
    switch (t.family) {
    case 'A': return (t.rank + 1) / 2;
    case 'D': return t.rank % 2 == 0 ? t.rank : t.rank - 1;
    case 'E': return t.rank == 6 ? 4 : t.rank;
    default: return t.rank;
    }
}

/// Reference character table, members ordered as in sigma_table_signs.
inline sign_character eic_character(root_system_type t)
{
    if (t.family == 'A' && t.rank % 2 == 0) throw error(errc::not_applicable, "no character table for " + t.name());
    if (!rank_in_bounds(t)) throw error(errc::invalid_rank, t.name());
    const int r = sign_rank(t), d = t.rank;
    sign_character c{r, 0};
    for (int i = 1; i <= r; ++i) {
        bool plus = false;
        switch (t.family) {
        case 'B': plus = i % 2 == 1 && i < d; break;
        case 'C': plus = (d + 1 - i) % 2 == 0; break;
        case 'E':
            if (d == 7) plus = i == 1 || i == 2;
            if (d == 8) plus = i == 1 || i == 3;
            break;
        default: break;
        }
        if (!plus) c.minus |= basis_vector(i - 1);
    }
    return c;
}

/// Reference coroot-action table: per simple coroot, the listed e-indices (1-based),
/// nullopt where no entry is given.
inline std::vector<std::optional<std::vector<int>>> sract_reference(root_system_type t)
{
    const int d = t.rank;
    std::vector<std::optional<std::vector<int>>> rows(d);
    auto set = [&](int k, std::vector<int> e) { rows[k - 1] = std::move(e); };
    switch (t.family) {
    case 'A':
        for (int k = 1; k <= d; ++k) {
            if (k % 2 == 1) set(k, {});
            else set(k, {k / 2, k / 2 + 1});
        }
        break;
    case 'B':
        for (int k = 1; k <= d; ++k) {
            if (k % 2 == 1 || k == d) set(k, {});
            else if (k < d - 1) set(k, {k - 1, k, k + 1, k + 2});
        }
        if (d % 2 == 1) set(d - 1, {d - 2, d - 1, d});
        break;
    case 'C':
        for (int k = 1; k <= d; ++k) set(k, {});
        break;
    case 'D':
        for (int i = 1; i < d; ++i) {
            const int k = d - i;
            if (i % 2 == 1) set(k, {});
            else if (k > 1) set(k, {k - 1, k, k + 1, k + 2});
        }
        set(d, {});
        if (d % 2 == 1) set(1, {1, 2});
        break;
    case 'E':
        if (d == 6) {
            for (int k = 1; k < 4; ++k) set(k, {});
            set(4, {1, 2, 3, 4});
        } else if (d == 7) {
            for (int k : {2, 3, 5, 7}) set(k, {});
            set(1, {1, 3, 4, 6});
            set(4, {2, 3, 5, 6});
            set(6, {4, 5, 7});
        } else {
            for (int k : {2, 3, 5, 7}) set(k, {});
            set(1, {3, 4, 6, 8});
            set(4, {2, 3, 5, 8});
            set(6, {5, 6, 7});
            set(8, {1, 4, 6, 7});
        }
        break;
    case 'F':
        set(1, {1, 2, 3, 4});
        for (int k = 2; k <= 4; ++k) set(k, {});
        break;
    case 'G':
        set(1, {});
        set(2, {1, 2});
        break;
    }
    return rows;
}

struct constraint {
    sign_vector v = 0;
    int value = 1;
    std::string source;
};

struct character_solution {
    enum class status { unique, ambiguous, inconsistent };
    status st = status::inconsistent;
    sign_character chi;
    int rank = 0;
    /// Basis vectors outside the span of the constraints (ambiguous case).
    std::vector<sign_vector> unspanned;
    /// A combination of constraints forcing 1 = -1 (inconsistent case).
    std::vector<std::size_t> violated;
};

/// GF(2) elimination; chi(v) = value is the linear equation <v, minus> = [value == -1].
inline character_solution solve_character(int r, const std::vector<constraint>& cs)
{
    struct row {
        sign_vector v;
        bool rhs;
        std::vector<std::size_t> from;
    };
    std::vector<row> pivots(r);
    std::vector<bool> used(r, false);
    character_solution out;
    out.chi.r = r;
    for (std::size_t k = 0; k < cs.size(); ++k) {
        row x{cs[k].v, cs[k].value == -1, {k}};
        for (int b = r - 1; b >= 0 && x.v; --b) {
            if (!(x.v & basis_vector(b))) continue;
            if (!used[b]) {
                pivots[b] = x;
                used[b] = true;
                x.v = 0;
                x.rhs = false;
                break;
            }
            x.v ^= pivots[b].v;
            x.rhs ^= pivots[b].rhs;
            x.from.insert(x.from.end(), pivots[b].from.begin(), pivots[b].from.end());
        }
        if (x.v == 0 && x.rhs) {
            out.st = character_solution::status::inconsistent;
            std::sort(x.from.begin(), x.from.end());
            std::vector<std::size_t> odd;
            for (std::size_t i = 0; i < x.from.size();) {
                std::size_t j = i;
                while (j < x.from.size() && x.from[j] == x.from[i]) ++j;
                if ((j - i) % 2 == 1) odd.push_back(x.from[i]);
                i = j;
            }
            out.violated = std::move(odd);
            return out;
        }
    }
    for (int b = 0; b < r; ++b) {
        if (used[b]) ++out.rank;
        else out.unspanned.push_back(basis_vector(b));
    }
    if (out.rank < r) {
        out.st = character_solution::status::ambiguous;
        return out;
    }
    // back substitution, lowest pivot first
    for (int b = 0; b < r; ++b) {
        const sign_vector lower = pivots[b].v & (basis_vector(b) - 1);
        const bool bit = pivots[b].rhs ^ (std::popcount(lower & out.chi.minus) % 2 == 1);
        if (bit) out.chi.minus |= basis_vector(b);
    }
    out.st = character_solution::status::unique;
    return out;
}

/// Sign constraints from negated simple roots, B2-pairs and simple coroots.
inline std::vector<constraint> build_constraints(const root_system& sys, const so_set& sigma, const chamber& c0)
{
    std::vector<constraint> out;
    const int r = static_cast<int>(sigma.size());
    for (int i = 0; i < r; ++i)
        if (sys.height(sigma[i]) == -1) out.push_back({basis_vector(i), -1, "sroot"});
    std::set<sign_vector> pairs;
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) {
            if (i == j) continue;
            root_vec a(sys.rank());
            bool integral = true;
            for (int k = 0; k < sys.rank(); ++k) {
                const int diff = sys.root(sigma[j])[k] - sys.root(sigma[i])[k];
                if (diff % 2 != 0) integral = false;
                a[k] = diff / 2;
            }
            if (!integral) continue;
            const auto ai = sys.find(a);
            if (!ai) continue;
            if (sys.length2(sigma[j]) != 2 * sys.length2(*ai)) continue;
            if (sys.pair(*ai, sigma[j]) == 0) continue;
            if (sys.height(*ai) != -1) continue;
            if ((c0.h[sigma[j]] - c0.h[sigma[i]]) % 4 != 0) continue;
            const sign_vector v = basis_vector(i) | basis_vector(j);
            if (pairs.insert(v).second) out.push_back({v, -1, "cedeux"});
        }
    for (int k = 0; k < sys.rank(); ++k)
        out.push_back({coroot_action(sys, sigma, coroot(sys, k)), 1, "coroot" + std::to_string(k + 1)});
    return out;
}

/// Coweights representing Y/Y^2 for the torus comparison, per type.
inline std::vector<coweight> chi_representatives(const root_system& sys)
{
    const auto t = sys.type();
    const int d = t.rank;
    switch (t.family) {
    case 'A':
    case 'B': return {fundamental_coweight(sys, 0)};
    case 'C': return {fundamental_coweight(sys, d - 1)};
    case 'D':
        if (d % 2 == 0) return {fundamental_coweight(sys, 0), fundamental_coweight(sys, d - 1)};
        return {fundamental_coweight(sys, d - 1)};
    case 'E':
        if (d == 6)
            return {coweight{{rational(1, 3), rational(0), rational(-1, 3), rational(0), rational(1, 3), rational(-1, 3)}}};
        if (d == 7)
            return {coweight{{rational(0), rational(1, 2), rational(0), rational(0), rational(1, 2), rational(0), rational(1, 2)}}};
        return {};
    default: return {};
    }
}

struct r1r2_result {
    int r1 = 0;
    int r2 = 0;
    int dimension = 0;
};

/// Simple roots spanned by the sign-calculus Sigma_a.
inline std::vector<int> sigma_levi(const root_system& sys)
{
    std::vector<int> J;
    const auto sigma = sigma_table_signs(sys);
    for (int k = 0; k < sys.rank(); ++k)
        for (int b : sigma)
            if (sys.root(b)[k] != 0) {
                J.push_back(k);
                break;
            }
    return J;
}

inline r1r2_result r1_r2(const root_system& sys)
{
    const auto t = sys.type();
    if (!has_alternative_table(t) || t.rank < 3)
        throw error(errc::not_applicable, t.name() + " has a zero-dimensional fixed apartment");
    const auto J = sigma_levi(sys);
    r1r2_result res;
    res.dimension = sys.rank() - static_cast<int>(J.size());
    std::optional<r1r2_result> first;
    for (int k = 0; k < sys.rank(); ++k) {
        if (std::find(J.begin(), J.end(), k) != J.end()) continue;
        r1r2_result cur = res;
        for (int b = 0; b < sys.size(); ++b) {
            if (!sys.positive(b)) continue;
            bool ok = sys.root(b)[k] == 1;
            for (int m = 0; m < sys.rank() && ok; ++m)
                if (m != k && sys.root(b)[m] != 0 && std::find(J.begin(), J.end(), m) == J.end()) ok = false;
            if (!ok) continue;
            ++cur.r1;
            if (sys.height(b) % 2 == 0) ++cur.r2;
        }
        if (!first) first = cur;
        else if (first->r1 != cur.r1 || first->r2 != cur.r2)
            throw error(errc::domain_error, "r1/r2 depend on the separating root");
    }
    return *first;
}

/// k = 0: base; k >= 1: base/(1-q) * (2/(1-q))^{k-1}.
inline rational a2n_class_value(int k, long q, const rational& base)
{
    if (k < 0) throw error(errc::invalid_argument, "class size must be nonnegative");
    if (k == 0) return base;
    const rational step = rational(1) / (1 - q);
    return base * step * pow(2 * step, k - 1);
}

} // namespace steinberg
