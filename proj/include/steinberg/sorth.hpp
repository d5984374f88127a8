#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "steinberg/rootsys.hpp"

namespace steinberg {

/// Ordered list of root indices beta_1 .. beta_r.
using so_set = std::vector<int>;

inline bool is_so_set(const root_system& sys, const so_set& s)
{
    if (static_cast<int>(s.size()) > sys.rank()) return false;
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j) {
            if (s[i] == s[j] || s[i] == sys.neg(s[j])) return false;
            if (!strongly_orthogonal(sys, s[i], s[j])) return false;
        }
    return true;
}

/// Positive representatives, sorted.
inline std::vector<int> positive_key(const root_system& sys, const so_set& s)
{
    return canonical_set(sys, s, true);
}

struct c1_witness {
    int alpha;
    int beta;
};

inline std::optional<c1_witness> satisfies_c1(const root_system& sys, const so_set& s)
{
    for (int a : s)
        for (int b = 0; b < sys.size(); ++b) {
            bool orth = true;
            for (int x : s)
                if (x != a && sys.pair(x, b) != 0) {
                    orth = false;
                    break;
                }
            if (orth && sys.pair(a, b) % 2 != 0) return c1_witness{a, b};
        }
    return std::nullopt;
}

/// Roots strongly orthogonal to every member of s.
inline std::vector<int> so_complement(const root_system& sys, const std::vector<int>& s, const std::vector<int>& within)
{
    std::vector<int> out;
    for (int r : within) {
        bool ok = true;
        for (int x : s)
            if (r == x || r == sys.neg(x) || !strongly_orthogonal(sys, r, x)) {
                ok = false;
                break;
            }
        if (ok) out.push_back(r);
    }
    return out;
}

inline std::vector<int> so_complement(const root_system& sys, const so_set& s)
{
    std::vector<int> all(sys.size());
    std::iota(all.begin(), all.end(), 0);
    return so_complement(sys, s, all);
}

inline bool is_closed_subsystem(const root_system& sys, const std::vector<int>& roots)
{
    std::set<int> in(roots.begin(), roots.end());
    for (int a : roots) {
        if (!in.contains(sys.neg(a))) return false;
        for (int b : roots) {
            const int c = sys.add(a, b);
            if (c >= 0 && !in.contains(c)) return false;
        }
    }
    return true;
}

/// Type label of a subsystem, e.g. "A2+A1", components ordered by decreasing rank.
inline std::string classify_subsystem(const root_system& sys, const std::vector<int>& roots)
{
    std::vector<int> pos;
    for (int r : roots)
        if (sys.positive(r)) pos.push_back(r);
    std::set<int> in(pos.begin(), pos.end());
    std::vector<int> simple;
    for (int r : pos) {
        bool decomposable = false;
        for (int a : pos) {
            const int b = sys.add(r, sys.neg(a));
            if (b >= 0 && in.contains(b)) {
                decomposable = true;
                break;
            }
        }
        if (!decomposable) simple.push_back(r);
    }
    std::vector<int> comp(pos.size(), -1);
    int ncomp = 0;
    for (std::size_t i = 0; i < pos.size(); ++i) {
        if (comp[i] >= 0) continue;
        std::vector<std::size_t> st{i};
        comp[i] = ncomp;
        while (!st.empty()) {
            auto x = st.back();
            st.pop_back();
            for (std::size_t j = 0; j < pos.size(); ++j)
                if (comp[j] < 0 && sys.pair(pos[x], pos[j]) != 0) {
                    comp[j] = ncomp;
                    st.push_back(j);
                }
        }
        ++ncomp;
    }
    std::vector<std::pair<int, std::string>> parts;
    for (int c = 0; c < ncomp; ++c) {
        int r = 0, npos = 0, nlong = 0, maxlen = 0;
        for (std::size_t i = 0; i < pos.size(); ++i) {
            if (comp[i] != c) continue;
            ++npos;
            maxlen = std::max(maxlen, sys.length2(pos[i]));
            if (std::find(simple.begin(), simple.end(), pos[i]) != simple.end()) ++r;
        }
        for (std::size_t i = 0; i < pos.size(); ++i)
            if (comp[i] == c && sys.length2(pos[i]) == maxlen) ++nlong;
        const int N = 2 * npos;
        std::string name;
        if (nlong == npos) {
            if (N == r * (r + 1)) name = "A" + std::to_string(r);
            else if (N == 2 * r * (r - 1)) name = "D" + std::to_string(r);
            else name = "E" + std::to_string(r);
        } else if (r == 2 && N == 12) {
            name = "G2";
        } else if (r == 4 && N == 48) {
            name = "F4";
        } else if (r == 2) {
            name = "B2";
        } else if (2 * nlong == 2 * r * (r - 1)) {
            name = "B" + std::to_string(r);
        } else {
            name = "C" + std::to_string(r);
        }
        parts.emplace_back(r, name);
    }
    std::sort(parts.begin(), parts.end(), [](const auto& a, const auto& b) {
        return a.first != b.first ? a.first > b.first : a.second < b.second;
    });
    std::string out;
    for (const auto& [r, n] : parts) out += (out.empty() ? "" : "+") + n;
    return out.empty() ? "0" : out;
}

/// Highest-root recursion on the strongly orthogonal complement.
inline so_set sigma_a(const root_system& sys)
{
    so_set out;
    std::function<void(std::vector<int>)> rec = [&](std::vector<int> roots) {
        std::set<int> rem(roots.begin(), roots.end());
        std::vector<std::vector<int>> comps;
        while (!rem.empty()) {
            const int x = *rem.begin();
            rem.erase(rem.begin());
            std::vector<int> comp{x}, st{x};
            while (!st.empty()) {
                const int y = st.back();
                st.pop_back();
                for (auto it = rem.begin(); it != rem.end();) {
                    if (sys.pair(y, *it) != 0) {
                        comp.push_back(*it);
                        st.push_back(*it);
                        it = rem.erase(it);
                    } else {
                        ++it;
                    }
                }
            }
            std::sort(comp.begin(), comp.end());
            comps.push_back(std::move(comp));
        }
        std::sort(comps.begin(), comps.end(), [](const auto& a, const auto& b) { return a.front() < b.front(); });
        for (const auto& comp : comps) {
            int top = -1;
            for (int r : comp) {
                if (!sys.positive(r)) continue;
                if (top < 0 || sys.height(r) > sys.height(top) || (sys.height(r) == sys.height(top) && r > top))
                    top = r;
            }
            out.push_back(top);
            std::vector<int> rest;
            for (int r : comp)
                if (r != top && r != sys.neg(top) && strongly_orthogonal(sys, r, top)) rest.push_back(r);
            rec(std::move(rest));
        }
    };
    std::vector<int> all(sys.size());
    std::iota(all.begin(), all.end(), 0);
    rec(std::move(all));
    return out;
}

/// Reference Sigma_a in the member order used by the sign calculus.
/// alternative selects the second listing for A_{2n-1}, D_{2n+1}, E6.
inline so_set sigma_table(const root_system& sys, bool alternative = false)
{
    const auto t = sys.type();
    const int d = t.rank;
    std::vector<root_vec> v;
    auto eps = [&](std::initializer_list<std::pair<int, int>> terms) { v.push_back(from_epsilon(sys, terms)); };
    auto simple = [&](std::initializer_list<std::pair<int, int>> terms) { v.push_back(from_simple(sys, terms)); };
    const root_vec minus_top = negate(sys.highest_root());
    switch (t.family) {
    case 'A':
        if (d % 2 == 0) throw error(errc::not_applicable, "no Sigma_a table for " + t.name());
        for (int i = 1; i <= (d + 1) / 2; ++i) {
            if (alternative) simple({{-1, 2 * i - 1}});
            else eps({{-1, i}, {1, d + 2 - i}});
        }
        break;
    case 'B':
    case 'D': {
        const int off = (t.family == 'D' && d % 2 == 1 && alternative) ? 1 : 0;
        for (int i = 1; i <= d / 2; ++i) {
            const int a = 2 * i - 1 + off, b = 2 * i + off;
            eps({{-1, a}, {-1, b}});
            eps({{-1, a}, {1, b}});
        }
        if (t.family == 'B' && d % 2 == 1) eps({{-1, d}});
        break;
    }
    case 'C':
        for (int i = 1; i <= d; ++i) eps({{-2, i}});
        break;
    case 'E':
        if (d == 6 && alternative) {
            simple({{-1, 2}, {-1, 3}, {-2, 4}, {-1, 5}});
            simple({{-1, 2}});
            simple({{-1, 3}});
            simple({{-1, 5}});
        } else if (d == 6) {
            v.push_back(minus_top);
            simple({{-1, 1}, {-1, 3}, {-1, 4}, {-1, 5}, {-1, 6}});
            simple({{-1, 3}, {-1, 4}, {-1, 5}});
            simple({{-1, 4}});
        } else if (d == 7) {
            v.push_back(minus_top);
            simple({{-1, 2}});
            simple({{-1, 3}});
            simple({{-1, 2}, {-1, 3}, {-2, 4}, {-2, 5}, {-2, 6}, {-1, 7}});
            simple({{-1, 5}});
            simple({{-1, 2}, {-1, 3}, {-2, 4}, {-1, 5}});
            simple({{-1, 7}});
        } else {
            v.push_back(minus_top);
            simple({{-1, 2}});
            simple({{-1, 3}});
            simple({{-2, 1}, {-2, 2}, {-3, 3}, {-4, 4}, {-3, 5}, {-2, 6}, {-1, 7}});
            simple({{-1, 5}});
            simple({{-1, 2}, {-1, 3}, {-2, 4}, {-2, 5}, {-2, 6}, {-1, 7}});
            simple({{-1, 7}});
            simple({{-1, 2}, {-1, 3}, {-2, 4}, {-1, 5}});
        }
        break;
    case 'F':
        v.push_back(minus_top);
        simple({{-1, 2}});
        simple({{-1, 2}, {-2, 3}});
        simple({{-1, 2}, {-2, 3}, {-2, 4}});
        break;
    case 'G':
        simple({{-1, 1}});
        v.push_back(minus_top);
        break;
    }
    return to_indices(sys, v);
}

inline bool has_alternative_table(root_system_type t)
{
    return (t.family == 'A' && t.rank % 2 == 1) || (t.family == 'D' && t.rank % 2 == 1) ||
           (t.family == 'E' && t.rank == 6);
}

/// Table used by the sign calculus: the alternative listing where one exists.
inline so_set sigma_table_signs(const root_system& sys)
{
    return sigma_table(sys, has_alternative_table(sys.type()));
}

/// Normal form of a set of positive roots under W, with a simple-reflection word
/// carrying the input onto it (up to member signs).
class conjugacy {
public:
    explicit conjugacy(const root_system& sys) : sys_(sys) {}

    struct form {
        std::vector<int> roots;
        std::vector<int> word;
    };

    form normal_form(const std::vector<int>& s) const
    {
        std::vector<int> all(sys_.rank());
        std::iota(all.begin(), all.end(), 0);
        return nf(canonical_set(sys_, s, true), all);
    }

    /// Image of s under the word, member signs normalized.
    std::vector<int> apply(const std::vector<int>& word, std::vector<int> s) const
    {
        for (int j : word)
            for (int& x : s) x = sys_.reflect(x, sys_.simple(j));
        return canonical_set(sys_, std::move(s), true);
    }

private:
    std::vector<std::vector<int>> components(const std::vector<int>& J) const
    {
        std::set<int> rem(J.begin(), J.end());
        std::vector<std::vector<int>> out;
        while (!rem.empty()) {
            const int x = *rem.begin();
            rem.erase(rem.begin());
            std::vector<int> comp{x}, st{x};
            while (!st.empty()) {
                const int y = st.back();
                st.pop_back();
                for (auto it = rem.begin(); it != rem.end();) {
                    if (sys_.gram()[y][*it] != 0) {
                        comp.push_back(*it);
                        st.push_back(*it);
                        it = rem.erase(it);
                    } else {
                        ++it;
                    }
                }
            }
            std::sort(comp.begin(), comp.end());
            out.push_back(std::move(comp));
        }
        return out;
    }

    bool in_span(int a, const std::vector<int>& J) const
    {
        const auto& r = sys_.root(a);
        for (int k = 0; k < sys_.rank(); ++k)
            if (r[k] != 0 && !std::binary_search(J.begin(), J.end(), k)) return false;
        return true;
    }

    form nf(const std::vector<int>& s, const std::vector<int>& J) const
    {
        form out;
        if (s.empty()) return out;
        for (const auto& comp : components(J)) {
            std::vector<int> sub;
            for (int a : s)
                if (in_span(a, comp)) sub.push_back(a);
            if (sub.empty()) continue;
            form r = nf_irreducible(sub, comp);
            out.roots.insert(out.roots.end(), r.roots.begin(), r.roots.end());
            out.word.insert(out.word.end(), r.word.begin(), r.word.end());
        }
        std::sort(out.roots.begin(), out.roots.end());
        return out;
    }

    form nf_irreducible(const std::vector<int>& s, const std::vector<int>& comp) const
    {
        int maxlen = 0;
        for (int a : s) maxlen = std::max(maxlen, sys_.length2(a));
        std::optional<form> best;
        for (std::size_t idx = 0; idx < s.size(); ++idx) {
            if (sys_.length2(s[idx]) != maxlen) continue;
            std::vector<int> word;
            int x = s[idx];
            for (;;) {
                auto it = std::find_if(comp.begin(), comp.end(), [&](int j) { return sys_.pair(x, sys_.simple(j)) < 0; });
                if (it == comp.end()) break;
                x = sys_.reflect(x, sys_.simple(*it));
                word.push_back(*it);
            }
            std::vector<int> rest;
            for (std::size_t k = 0; k < s.size(); ++k) {
                if (k == idx) continue;
                int y = s[k];
                for (int j : word) y = sys_.reflect(y, sys_.simple(j));
                rest.push_back(sys_.positive_rep(y));
            }
            std::vector<int> J2;
            for (int j : comp)
                if (sys_.pair(x, sys_.simple(j)) == 0) J2.push_back(j);
            form r = nf(canonical_set(sys_, rest, true), J2);
            form cand;
            cand.roots = r.roots;
            cand.roots.push_back(x);
            std::sort(cand.roots.begin(), cand.roots.end());
            cand.word = word;
            cand.word.insert(cand.word.end(), r.word.begin(), r.word.end());
            if (!best || cand.roots < best->roots) best = std::move(cand);
        }
        return *best;
    }

    const root_system& sys_;
};

struct conjugacy_result {
    bool value = false;
    /// Simple reflections (0-based), applied left to right.
    std::vector<int> word;
    /// The subset of the target hit by the word.
    std::vector<int> image;
};

/// Whether some w in W carries s into t, member signs ignored. The word is verified.
inline conjugacy_result is_conjugate_subset_of(const root_system& sys, const so_set& s, const so_set& t)
{
    conjugacy cj(sys);
    conjugacy_result res;
    if (s.size() > t.size()) return res;
    const auto fs = cj.normal_form(s);
    const std::size_t k = s.size();
    std::vector<int> tp = canonical_set(sys, t, true);
    std::vector<bool> pick(tp.size(), false);
    std::fill(pick.begin(), pick.begin() + static_cast<long>(k), true);
    do {
        std::vector<int> sub;
        for (std::size_t i = 0; i < tp.size(); ++i)
            if (pick[i]) sub.push_back(tp[i]);
        const auto ft = cj.normal_form(sub);
        if (ft.roots != fs.roots) continue;
        std::vector<int> word;
        auto push = [&](int j) {
            if (!word.empty() && word.back() == j) word.pop_back();
            else word.push_back(j);
        };
        for (int j : fs.word) push(j);
        for (auto it = ft.word.rbegin(); it != ft.word.rend(); ++it) push(*it);
        if (cj.apply(word, s) != canonical_set(sys, sub, true)) continue;
        res.value = true;
        res.word = std::move(word);
        res.image = std::move(sub);
        return res;
    } while (std::prev_permutation(pick.begin(), pick.end()));
    return res;
}

/// All SO sets of positive roots, then one representative per W-class.
struct so_enumeration {
    std::size_t raw_count = 0;
    std::vector<so_set> classes;
};

inline so_enumeration enumerate_so_sets(const root_system& sys, int max_rank = -1)
{
    if (max_rank < 0) max_rank = sys.rank();
    const auto pos = sys.positive_roots();
    const std::size_t cap = budget();
    conjugacy cj(sys);
    so_enumeration out;
    std::map<std::vector<int>, so_set> reps;
    so_set cur;
    std::function<void(std::size_t)> dfs = [&](std::size_t start) {
        if (++out.raw_count > cap) throw error(errc::budget_exceeded, "SO enumeration over " + sys.type().name());
        auto key = cj.normal_form(cur).roots;
        reps.try_emplace(std::move(key), cur);
        if (static_cast<int>(cur.size()) >= max_rank) return;
        for (std::size_t k = start; k < pos.size(); ++k) {
            bool ok = true;
            for (int x : cur)
                if (!strongly_orthogonal(sys, pos[k], x)) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            cur.push_back(pos[k]);
            dfs(k + 1);
            cur.pop_back();
        }
    };
    dfs(0);
    for (auto& [k, v] : reps) out.classes.push_back(v);
    std::sort(out.classes.begin(), out.classes.end(),
              [](const so_set& a, const so_set& b) { return a.size() != b.size() ? a.size() < b.size() : a < b; });
    return out;
}

inline bool is_maximal_so(const root_system& sys, const so_set& s) { return so_complement(sys, s).empty(); }

inline bool is_maximal_orthogonal(const root_system& sys, const so_set& s)
{
    for (int b = 0; b < sys.size(); ++b) {
        bool orth = true;
        for (int x : s)
            if (b == x || b == sys.neg(x) || sys.pair(b, x) != 0) {
                orth = false;
                break;
            }
        if (orth) return false;
    }
    return true;
}

struct anismax_report {
    std::size_t classes = 0;
    std::size_t c1_witnessed = 0;
    bool clause1 = false;  // Sigma_a maximal, (C1)-free, unique such class
    bool clause2 = false;  // maximal as an orthogonal set
    bool clause3 = false;  // every (C1)-free class conjugate into Sigma_a
    bool clause4 = false;  // A_{2n}: every nonempty class witnessed
    bool a_even = false;

    bool ok() const { return a_even ? clause4 : clause1 && clause2 && clause3; }
};

inline anismax_report verify_anismax(const root_system& sys)
{
    anismax_report rep;
    rep.a_even = is_a_even(sys.type());
    const auto en = enumerate_so_sets(sys);
    rep.classes = en.classes.size();
    const so_set sa = sigma_a(sys);
    bool nonempty_witnessed = true, into_sa = true;
    std::size_t maximal_c1_free = 0;
    for (const auto& s : en.classes) {
        const bool w = satisfies_c1(sys, s).has_value();
        if (w) ++rep.c1_witnessed;
        if (!s.empty() && !w) nonempty_witnessed = false;
        if (!w && !is_conjugate_subset_of(sys, s, sa).value) into_sa = false;
        if (!w && is_maximal_so(sys, s)) ++maximal_c1_free;
    }
    rep.clause4 = rep.a_even && nonempty_witnessed;
    if (!rep.a_even) {
        rep.clause1 = is_maximal_so(sys, sa) && !satisfies_c1(sys, sa) && maximal_c1_free == 1;
        rep.clause2 = is_maximal_orthogonal(sys, sa);
        rep.clause3 = into_sa;
    }
    return rep;
}

} // namespace steinberg
