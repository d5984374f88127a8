#pragma once

#include <algorithm>
#include <compare>
#include <deque>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "steinberg/error.hpp"
#include "steinberg/rational.hpp"

namespace steinberg {

/// Coordinates in the simple-root basis, Bourbaki numbering.
using root_vec = std::vector<int>;
using int_matrix = std::vector<std::vector<int>>;

struct root_system_type {
    char family = 'A';
    int rank = 1;

    std::string name() const { return std::string(1, family) + std::to_string(rank); }
    friend auto operator<=>(const root_system_type&, const root_system_type&) = default;
};

inline bool rank_in_bounds(root_system_type t)
{
    switch (t.family) {
    case 'A': return t.rank >= 1;
    case 'B':
    case 'C': return t.rank >= 2;
    case 'D': return t.rank >= 3;
    case 'E': return t.rank >= 6 && t.rank <= 8;
    case 'F': return t.rank == 4;
    case 'G': return t.rank == 2;
    default: return false;
    }
}

inline bool is_a_even(root_system_type t) { return t.family == 'A' && t.rank % 2 == 0; }

/// Coweight in the simple-coroot basis.
struct coweight {
    std::vector<rational> c;
};

namespace detail {

// Short roots have squared length 2; long roots 4 (B, C, F) or 6 (G).
inline int_matrix gram(root_system_type t)
{
    const int n = t.rank;
    std::vector<int> len(n, 2);
    std::vector<std::pair<int, int>> edges;
    auto chain = [&](int upto) {
        for (int i = 0; i + 1 < upto; ++i) edges.emplace_back(i, i + 1);
    };
    switch (t.family) {
    case 'A': chain(n); break;
    case 'B':
        chain(n);
        std::fill(len.begin(), len.end() - 1, 4);
        break;
    case 'C':
        chain(n);
        len[n - 1] = 4;
        break;
    case 'D':
        chain(n - 1);
        edges.emplace_back(n - 3, n - 1);
        break;
    case 'E':
        edges = {{0, 2}, {2, 3}, {3, 4}, {1, 3}};
        for (int i = 4; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
        break;
    case 'F':
        chain(4);
        len = {4, 4, 2, 2};
        break;
    case 'G':
        chain(2);
        len = {2, 6};
        break;
    }
    int_matrix b(n, std::vector<int>(n, 0));
    for (int i = 0; i < n; ++i) b[i][i] = len[i];
    for (auto [i, j] : edges) b[i][j] = b[j][i] = -std::max(len[i], len[j]) / 2;
    return b;
}

inline std::vector<int> exponents(root_system_type t)
{
    const int n = t.rank;
    std::vector<int> m;
    switch (t.family) {
    case 'A':
        for (int i = 1; i <= n; ++i) m.push_back(i);
        break;
    case 'B':
    case 'C':
        for (int i = 1; i <= n; ++i) m.push_back(2 * i - 1);
        break;
    case 'D':
        for (int i = 1; i < n; ++i) m.push_back(2 * i - 1);
        m.push_back(n - 1);
        break;
    case 'E':
        if (n == 6) m = {1, 4, 5, 7, 8, 11};
        if (n == 7) m = {1, 5, 7, 9, 11, 13, 17};
        if (n == 8) m = {1, 7, 11, 13, 17, 19, 23, 29};
        break;
    case 'F': m = {1, 5, 7, 11}; break;
    case 'G': m = {1, 5}; break;
    }
    std::sort(m.begin(), m.end());
    return m;
}

} // namespace detail

class root_system {
public:
    explicit root_system(root_system_type t) : type_(t)
    {
        if (!rank_in_bounds(t))
            throw error(errc::invalid_rank, t.name() + " is outside the family bounds");
        const int n = t.rank;
        gram_ = detail::gram(t);
        cartan_.assign(n, std::vector<int>(n));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) cartan_[i][j] = 2 * gram_[j][i] / gram_[i][i];

        std::set<root_vec> found;
        std::deque<root_vec> todo;
        for (int i = 0; i < n; ++i) {
            root_vec e(n, 0);
            e[i] = 1;
            found.insert(e);
            todo.push_back(e);
        }
        while (!todo.empty()) {
            root_vec v = todo.front();
            todo.pop_front();
            for (int k = 0; k < n; ++k) {
                root_vec w = v;
                w[k] -= coroot_pairing(v, k);
                if (found.insert(w).second) todo.push_back(std::move(w));
            }
        }
        roots_.assign(found.begin(), found.end());
        for (int i = 0; i < size(); ++i) index_.emplace(roots_[i], i);

        const int N = size();
        neg_.resize(N);
        height_.resize(N);
        len2_.resize(N);
        for (int i = 0; i < N; ++i) {
            root_vec m = roots_[i];
            for (int& x : m) x = -x;
            neg_[i] = index_.at(m);
            height_[i] = std::accumulate(roots_[i].begin(), roots_[i].end(), 0);
            len2_[i] = inner(roots_[i], roots_[i]);
        }
        long_len_ = *std::max_element(len2_.begin(), len2_.end());
        pair_.resize(static_cast<std::size_t>(N) * N);
        add_.resize(pair_.size());
        refl_.resize(pair_.size());
        for (int a = 0; a < N; ++a) {
            for (int b = 0; b < N; ++b) {
                const int p = 2 * inner(roots_[a], roots_[b]) / len2_[b];
                pair_[a * N + b] = p;
                root_vec s(n), r(n);
                for (int k = 0; k < n; ++k) {
                    s[k] = roots_[a][k] + roots_[b][k];
                    r[k] = roots_[a][k] - p * roots_[b][k];
                }
                auto it = index_.find(s);
                add_[a * N + b] = it == index_.end() ? -1 : it->second;
                refl_[a * N + b] = index_.at(r);
            }
        }
        simple_.resize(n);
        for (int k = 0; k < n; ++k) {
            root_vec e(n, 0);
            e[k] = 1;
            simple_[k] = index_.at(e);
        }
        highest_ = static_cast<int>(std::max_element(height_.begin(), height_.end()) - height_.begin());
        exponents_ = detail::exponents(t);

        rho_.assign(n, rational(0));
        for (int i = 0; i < N; ++i)
            if (positive(i))
                for (int k = 0; k < n; ++k) rho_[k] += roots_[i][k];
        for (auto& x : rho_) x /= 2;
    }

    const root_system_type& type() const { return type_; }
    int rank() const { return type_.rank; }
    int size() const { return static_cast<int>(roots_.size()); }

    const std::vector<root_vec>& roots() const { return roots_; }
    const root_vec& root(int i) const { return roots_[i]; }

    std::optional<int> find(std::span<const int> v) const
    {
        auto it = index_.find(root_vec(v.begin(), v.end()));
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }
    int index(std::span<const int> v) const
    {
        if (auto i = find(v)) return *i;
        throw error(errc::not_a_root, "vector is not a root of " + type_.name());
    }
    bool is_root(std::span<const int> v) const { return find(v).has_value(); }

    int neg(int i) const { return neg_[i]; }
    int simple(int k) const { return simple_[k]; }
    int highest() const { return highest_; }
    const root_vec& highest_root() const { return roots_[highest_]; }

    /// <roots[a], roots[b]^vee>
    int pair(int a, int b) const { return pair_[a * size() + b]; }
    /// index of roots[a] + roots[b], or -1
    int add(int a, int b) const { return add_[a * size() + b]; }
    /// s_{roots[a]}(roots[b])
    int reflect(int b, int a) const { return refl_[b * size() + a]; }

    int height(int i) const { return height_[i]; }
    bool positive(int i) const { return height_[i] > 0; }
    int positive_rep(int i) const { return positive(i) ? i : neg_[i]; }
    int length2(int i) const { return len2_[i]; }
    bool is_long(int i) const { return len2_[i] == long_len_; }
    bool simply_laced() const
    {
        return std::all_of(len2_.begin(), len2_.end(), [&](int l) { return l == long_len_; });
    }

    const int_matrix& cartan() const { return cartan_; }
    const int_matrix& gram() const { return gram_; }
    const std::vector<int>& exponents() const { return exponents_; }
    /// Half-sum of positive roots, simple-root coordinates.
    const std::vector<rational>& rho() const { return rho_; }

    int inner(std::span<const int> a, std::span<const int> b) const
    {
        int s = 0;
        for (int i = 0; i < rank(); ++i)
            for (int j = 0; j < rank(); ++j) s += a[i] * gram_[i][j] * b[j];
        return s;
    }

    /// <v, alpha_k^vee> for an integral vector v.
    int coroot_pairing(std::span<const int> v, int k) const
    {
        int s = 0;
        for (int j = 0; j < rank(); ++j) s += v[j] * gram_[j][k];
        return 2 * s / gram_[k][k];
    }

    /// <lambda, xi> for a rational weight lambda in root coordinates.
    rational pairing(std::span<const rational> lambda, const coweight& xi) const
    {
        rational s = 0;
        for (int i = 0; i < rank(); ++i)
            for (int k = 0; k < rank(); ++k) s += lambda[k] * xi.c[i] * cartan_[i][k];
        return s;
    }
    rational pairing(int a, const coweight& xi) const
    {
        rational s = 0;
        for (int i = 0; i < rank(); ++i) s += xi.c[i] * pair(a, simple_[i]);
        return s;
    }

    std::vector<int> positive_roots() const
    {
        std::vector<int> out;
        for (int i = 0; i < size(); ++i)
            if (positive(i)) out.push_back(i);
        return out;
    }

private:
    root_system_type type_;
    int_matrix gram_, cartan_;
    std::vector<root_vec> roots_;
    std::map<root_vec, int> index_;
    std::vector<int> neg_, height_, len2_, simple_, exponents_;
    std::vector<int> pair_, add_, refl_;
    std::vector<rational> rho_;
    int highest_ = 0;
    int long_len_ = 2;
};

inline root_system build(root_system_type t) { return root_system(t); }

inline rational pairing(const root_system& sys, std::span<const int> alpha, const coweight& xi)
{
    return sys.pairing(sys.index(alpha), xi);
}

inline coweight coroot(const root_system& sys, int k)
{
    coweight xi{std::vector<rational>(sys.rank(), rational(0))};
    xi.c[k] = 1;
    return xi;
}

/// The coroot of roots[b] in the simple-coroot basis.
inline coweight coroot_of(const root_system& sys, int b)
{
    const root_vec& r = sys.root(b);
    coweight xi{std::vector<rational>(sys.rank(), rational(0))};
    for (int k = 0; k < sys.rank(); ++k)
        xi.c[k] = rational(r[k] * sys.gram()[k][k], sys.length2(b));
    return xi;
}

/// omega_j^vee: <alpha_k, omega_j^vee> = delta_{jk}.
inline coweight fundamental_coweight(const root_system& sys, int j)
{
    const int n = sys.rank();
    rational_matrix a(n, std::vector<rational>(n));
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i) a[k][i] = sys.cartan()[i][k];
    std::vector<rational> rhs(n, rational(0));
    rhs[j] = 1;
    return coweight{*solve(a, rhs)};
}

inline bool strongly_orthogonal(const root_system& sys, int a, int b)
{
    if (a == b || a == sys.neg(b))
        throw error(errc::proportional_pair, "strong orthogonality needs non-proportional roots");
    return sys.pair(a, b) == 0 && sys.add(a, b) < 0;
}

inline bool strongly_orthogonal(const root_system& sys, std::span<const int> a, std::span<const int> b)
{
    return strongly_orthogonal(sys, sys.index(a), sys.index(b));
}

inline int coxeter_number(const root_system& sys) { return 1 + sys.height(sys.highest()); }

/// Delta together with the negated highest root.
inline std::vector<root_vec> extended_simple_set(const root_system& sys)
{
    std::vector<root_vec> out;
    for (int k = 0; k < sys.rank(); ++k) out.push_back(sys.root(sys.simple(k)));
    out.push_back(sys.root(sys.neg(sys.highest())));
    return out;
}

/// epsilon_i (1-based) in simple-root coordinates for the classical families.
inline std::vector<rational> epsilon(root_system_type t, int i)
{
    const int n = t.rank;
    std::vector<rational> v(n, rational(0));
    switch (t.family) {
    case 'A':
    case 'B':
        for (int k = i - 1; k < n; ++k) v[k] = 1;
        break;
    case 'C':
        for (int k = i - 1; k < n - 1; ++k) v[k] = 1;
        v[n - 1] = rational(1, 2);
        break;
    case 'D':
        if (i == n) {
            v[n - 2] = rational(-1, 2);
            v[n - 1] = rational(1, 2);
        } else {
            for (int k = i - 1; k < n - 2; ++k) v[k] = 1;
            v[n - 2] += rational(1, 2);
            v[n - 1] += rational(1, 2);
        }
        break;
    default: throw error(errc::not_applicable, "no epsilon basis for " + t.name());
    }
    return v;
}

/// Root given as sum of coef * epsilon_i.
inline root_vec from_epsilon(const root_system& sys, std::initializer_list<std::pair<int, int>> terms)
{
    std::vector<rational> v(sys.rank(), rational(0));
    for (auto [coef, i] : terms) {
        auto e = epsilon(sys.type(), i);
        for (int k = 0; k < sys.rank(); ++k) v[k] += coef * e[k];
    }
    root_vec out(sys.rank());
    for (int k = 0; k < sys.rank(); ++k) {
        if (!is_integer(v[k])) throw error(errc::not_a_root, "non-integral epsilon combination");
        out[k] = static_cast<int>(num(v[k]));
    }
    sys.index(out);
    return out;
}

/// Root given by its simple-root coefficients (1-based index, coefficient).
inline root_vec from_simple(const root_system& sys, std::initializer_list<std::pair<int, int>> terms)
{
    root_vec out(sys.rank(), 0);
    for (auto [coef, i] : terms) out[i - 1] += coef;
    sys.index(out);
    return out;
}

inline root_vec negate(root_vec v)
{
    for (int& x : v) x = -x;
    return v;
}

struct orbit_result {
    std::vector<std::vector<int>> sets;
    bool truncated = false;
};

/// Canonical key of a root set: sorted indices, optionally replacing each root by its positive rep.
inline std::vector<int> canonical_set(const root_system& sys, std::vector<int> s, bool pm_insensitive)
{
    if (pm_insensitive)
        for (int& x : s) x = sys.positive_rep(x);
    std::sort(s.begin(), s.end());
    return s;
}

/// BFS closure of a root set under simple reflections.
inline orbit_result weyl_orbit(const root_system& sys, const std::vector<int>& seed, std::size_t max_size,
                               bool pm_insensitive = false)
{
    orbit_result out;
    std::set<std::vector<int>> seen;
    std::deque<std::vector<int>> todo;
    auto start = canonical_set(sys, seed, pm_insensitive);
    seen.insert(start);
    todo.push_back(start);
    while (!todo.empty()) {
        auto cur = std::move(todo.front());
        todo.pop_front();
        for (int k = 0; k < sys.rank(); ++k) {
            std::vector<int> img;
            img.reserve(cur.size());
            for (int x : cur) img.push_back(sys.reflect(x, sys.simple(k)));
            img = canonical_set(sys, std::move(img), pm_insensitive);
            if (seen.contains(img)) continue;
            if (seen.size() >= max_size) {
                out.truncated = true;
                continue;
            }
            seen.insert(img);
            todo.push_back(std::move(img));
        }
    }
    out.sets.assign(seen.begin(), seen.end());
    return out;
}

inline std::vector<int> to_indices(const root_system& sys, const std::vector<root_vec>& v)
{
    std::vector<int> out;
    for (const auto& r : v) out.push_back(sys.index(r));
    return out;
}

} // namespace steinberg
