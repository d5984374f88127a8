#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>

#include "steinberg/apartment.hpp"
#include "steinberg/cochain.hpp"
#include "steinberg/prasad.hpp"
#include "steinberg/series.hpp"
#include "steinberg/sorth.hpp"
#include "steinberg/tree_oracle.hpp"

using namespace steinberg;
using json = nlohmann::ordered_json;

namespace {

constexpr int exit_usage = 2;

struct usage_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct check {
    std::string id, description, status, value, expected, provenance, tolerance;
};

struct report {
    std::string suite;
    std::vector<check> checks;

    void add(std::string id, std::string description, std::string value, std::string expected, std::string provenance)
    {
        const std::string status = value == expected ? "pass" : "fail";
        checks.push_back({std::move(id), std::move(description), status, std::move(value), std::move(expected), std::move(provenance), {}});
    }
    void add(std::string id, std::string description, long value, long expected, std::string provenance)
    {
        add(std::move(id), std::move(description), std::to_string(value), std::to_string(expected), std::move(provenance));
    }
    void add_within(std::string id, std::string description, const rational& value, const rational& expected, const rational& tol,
                    std::string provenance)
    {
        const std::string status = abs(value - expected) <= tol ? "pass" : "fail";
        checks.push_back({std::move(id), std::move(description), status, to_string(value), to_string(expected), std::move(provenance), to_string(tol)});
    }
    void skip(std::string id, std::string description, std::string provenance)
    {
        checks.push_back({std::move(id), std::move(description), "skip", "", "", std::move(provenance), {}});
    }
    bool ok() const
    {
        return std::none_of(checks.begin(), checks.end(), [](const check& c) { return c.status == "fail"; });
    }
};

json to_json(const report& r)
{
    json checks = json::array();
    for (const auto& c : r.checks) {
        json j{{"id", c.id}, {"description", c.description}, {"status", c.status}, {"value", c.value}, {"expected", c.expected}};
        if (!c.tolerance.empty()) j["tolerance"] = c.tolerance;
        j["provenance"] = c.provenance;
        checks.push_back(std::move(j));
    }
    return json{{"suite", r.suite}, {"checks", std::move(checks)}};
}

root_system_type parse_type(const std::string& family, int rank)
{
    if (family.size() != 1) throw usage_error("type must be one of A B C D E F G");
    const root_system_type t{static_cast<char>(std::toupper(static_cast<unsigned char>(family[0]))), rank};
    if (!rank_in_bounds(t)) throw usage_error("invalid rank for type " + family + ": " + std::to_string(rank));
    return t;
}

std::string format_root(const root_vec& v)
{
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s + ")";
}

std::string format_set(const root_system& s, const so_set& x)
{
    std::string out;
    for (std::size_t i = 0; i < x.size(); ++i) out += (i ? " " : "") + format_root(s.root(x[i]));
    return out;
}

const std::vector<root_system_type>& tabled_types()
{
    static const std::vector<root_system_type> v{{'A', 1}, {'A', 3}, {'A', 5}, {'B', 2}, {'B', 3}, {'B', 4},
                                                 {'B', 5}, {'C', 2}, {'C', 3}, {'C', 4}, {'D', 4}, {'D', 5},
                                                 {'D', 6}, {'E', 6}, {'E', 7}, {'E', 8}, {'F', 4}, {'G', 2}};
    return v;
}

std::vector<root_system_type> sign_types()
{
    std::vector<root_system_type> out;
    for (int d = 1; d <= 8; d += 2) out.push_back({'A', d});
    for (char f : {'B', 'C'})
        for (int d = 2; d <= 8; ++d) out.push_back({f, d});
    for (int d = 3; d <= 8; ++d) out.push_back({'D', d});
    for (int d : {6, 7, 8}) out.push_back({'E', d});
    out.push_back({'F', 4});
    out.push_back({'G', 2});
    return out;
}

std::vector<root_system_type> all_types()
{
    std::vector<root_system_type> out;
    for (char f : {'A', 'B', 'C', 'D'})
        for (int d = 1; d <= 8; ++d)
            if (rank_in_bounds({f, d})) out.push_back({f, d});
    for (int d : {6, 7, 8}) out.push_back({'E', d});
    out.push_back({'F', 4});
    out.push_back({'G', 2});
    return out;
}

long root_count(root_system_type t)
{
    const long d = t.rank;
    switch (t.family) {
    case 'A': return d * (d + 1);
    case 'B':
    case 'C': return 2 * d * d;
    case 'D': return 2 * d * (d - 1);
    case 'E': return d == 6 ? 72 : d == 7 ? 126 : 240;
    case 'F': return 48;
    default: return 12;
    }
}

character_solution solve_for(const root_system& s)
{
    const auto sigma = sigma_table_signs(s);
    return solve_character(static_cast<int>(sigma.size()), build_constraints(s, sigma, canonical_sigma_chamber(s, sigma)));
}

report suite_rootsys()
{
    report r{"rootsys", {}};
    for (auto t : all_types()) {
        root_system s(t);
        const std::string n = t.name();
        r.add("rootsys." + n + ".roots", "number of roots of " + n, s.size(), root_count(t), "reference");
        r.add("rootsys." + n + ".coxeter", "Coxeter number times rank equals number of roots", static_cast<long>(coxeter_number(s)) * t.rank,
              s.size(), "derived");
        r.add("rootsys." + n + ".coxeter_parity", "Coxeter number odd iff type A_2n", coxeter_number(s) % 2, is_a_even(t) ? 1 : 0, "reference");
    }
    return r;
}

report suite_sorth()
{
    report r{"sorth", {}};
    for (auto t : tabled_types()) {
        root_system s(t);
        const auto sa = sigma_a(s);
        const auto res = is_conjugate_subset_of(s, sa, sigma_table(s));
        const bool same_size = sa.size() == sigma_table(s).size();
        r.add("sorth." + t.name() + ".sigma_a", "sigma_a conjugate to the reference table", res.value && same_size ? 1 : 0, 1, "reference");
    }
    for (auto t : std::vector<root_system_type>{{'A', 2}, {'A', 3}, {'A', 4}, {'B', 2}, {'B', 3}, {'C', 3}, {'D', 4}, {'G', 2}}) {
        const auto rep = verify_anismax(root_system(t));
        r.add("sorth." + t.name() + ".anismax", "anisotropy trichotomy over " + std::to_string(rep.classes) + " SO classes", rep.ok() ? 1 : 0, 1,
              "reference");
    }
    return r;
}

report suite_apartment()
{
    report r{"apartment", {}};
    for (auto [d, total, central] : std::vector<std::tuple<int, long, long>>{{2, 4, 1}, {3, 8, 0}, {4, 16, 1}}) {
        root_system s({'A', d});
        const auto cf = base_chambers(s).first;
        const std::string n = s.type().name();
        r.add("apartment." + n + ".e_in_f", "E-chambers in the base F-chamber", static_cast<long>(e_chambers_in_f_chamber(s, cf).size()), total,
              "derived");
        r.add("apartment." + n + ".central", "central E-chambers in the base F-chamber",
              static_cast<long>(central_chambers_bruteforce(s, cf).size()), central, "reference");
    }
    for (int d : {2, 4}) {
        root_system s({'A', d});
        const auto cf = base_chambers(s).first;
        const auto c0 = central_chamber(s, cf);
        const auto ws = walls(s, cf);
        for (std::size_t i = 0; i < ws.size(); ++i)
            r.add("apartment." + s.type().name() + ".dis3.wall" + std::to_string(i),
                  "central chambers of adjacent F-chambers are at distance 3", distance(s, c0, central_chamber(s, ws[i].across)), 3,
                  "reference");
    }
    std::mt19937 rng(20240601);
    std::uniform_int_distribution<int> u(-4, 4);
    for (auto t : std::vector<root_system_type>{{'A', 2}, {'C', 2}, {'G', 2}}) {
        root_system s(t);
        auto [f, e] = base_chambers(s);
        long bad = 0;
        for (int k = 0; k < 100; ++k) {
            std::vector<int> xi(s.rank());
            for (int& x : xi) x = u(rng);
            if (distance(s, e, translate(s, e, xi)) != 2 * distance(s, f, translate(s, f, xi))) ++bad;
        }
        r.add("apartment." + t.name() + ".doubled", "translations violating d_E = 2 d_F out of 100", bad, 0, "reference");
    }
    return r;
}

report suite_cochain(long q)
{
    report r{"cochain", {}};
    for (int d : {1, 2}) {
        root_system s({'A', d});
        const auto f = iwahori_vector(s, base_chambers(s).second, q, 4);
        long bad = 0;
        for (const auto& e : chambers_within(s, base_chambers(s).second, 3))
            for (const auto& fw : walls(s, e.c))
                if (panel_sum(s, {e.c, fw.w}, f) != 0) ++bad;
        r.add("cochain." + s.type().name() + ".harmonic", "nonzero panel sums of the Iwahori vector", bad, 0, "derived");
    }
    for (auto t : sign_types()) {
        root_system s(t);
        const auto sol = solve_for(s);
        const std::string n = t.name();
        r.add("cochain." + n + ".unique", "sign constraints have a unique solution", sol.st == character_solution::status::unique ? 1 : 0, 1,
              "derived");
        r.add("cochain." + n + ".eic", "solved character equals the reference table", format_character(sol.chi), format_character(eic_character(t)),
              "reference");
    }
    for (auto [t, r1, r2] : std::vector<std::tuple<root_system_type, long, long>>{{{'A', 3}, 4, 2}, {{'D', 5}, 8, 4}, {{'E', 6}, 8, 4}}) {
        const auto res = r1_r2(root_system(t));
        r.add("cochain." + t.name() + ".r1", "r1", res.r1, r1, "reference");
        r.add("cochain." + t.name() + ".r2", "r2", res.r2, r2, "reference");
    }
    return r;
}

report suite_series(long q, int radius)
{
    report r{"series", {}};
    for (auto t : std::vector<root_system_type>{{'A', 1}, {'A', 2}, {'C', 2}, {'G', 2}, {'A', 3}}) {
        root_system s(t);
        r.add("series." + t.name() + ".poincare", "closed form equals alcove count to degree 10", poincare_closed(s, 10) == poincare_bfs(s, 10) ? 1 : 0,
              1, "derived");
    }
    const auto lam = lambda_a2n_partial(1, q, radius);
    for (int R = std::min(6, radius); R <= radius; ++R)
        r.add_within("series.A2.lambda.R" + std::to_string(R), "partial sum of lambda within the tail bound of 1", lam.partial_sums[R],
                     lam.target, lam.tail_bounds[R], "reference");
    return r;
}

report suite_tree(long q, int radius)
{
    report r{"tree", {}};
    const auto b = build_ball(q, radius);
    const std::string p = "tree.q" + std::to_string(q) + ".R" + std::to_string(radius);
    if (radius >= 1) {
        const int inner = std::min(3, radius - 1);
        const auto hc = verify_hctest(b, inner);
        r.add(p + ".hctest", "Iwahori vectors of chambers within radius " + std::to_string(inner) + " are harmonic", static_cast<long>(hc.failed), 0,
              "derived");
    } else {
        r.skip(p + ".hctest", "radius 0 has no interior panel", "derived");
    }
    r.add(p + ".extension", "Legendre star extends harmonically", static_cast<long>(verify_extension(b, legendre_base(b)).failed), 0, "derived");
    const auto shells = extension_shell_sums(b, iwahori_base(b));
    for (int n = 1; n <= radius; ++n) r.add(p + ".shell" + std::to_string(n), "absolute Iwahori mass on shell", to_string(shells[n]), to_string(rational(2)), "derived");
    return r;
}

void write_flat(std::ostream& os, const std::vector<std::string>& header, const std::vector<std::vector<std::string>>& rows,
                const std::string& format)
{
    if (format == "json") {
        json arr = json::array();
        for (const auto& row : rows) {
            json o = json::object();
            for (std::size_t i = 0; i < header.size(); ++i) o[header[i]] = row[i];
            arr.push_back(std::move(o));
        }
        os << arr.dump(2) << "\n";
        return;
    }
    const std::string sep = format == "csv" ? "," : " | ";
    auto line = [&](const std::vector<std::string>& cells) {
        if (format == "markdown") os << "| ";
        for (std::size_t i = 0; i < cells.size(); ++i) os << (i ? sep : "") << cells[i];
        if (format == "markdown") os << " |";
        os << "\n";
    };
    line(header);
    if (format == "markdown") line(std::vector<std::string>(header.size(), "---"));
    for (const auto& row : rows) line(row);
}

int cmd_sigma_a(const std::string& family, int rank, const std::string& format)
{
    root_system s(parse_type(family, rank));
    const auto sa = sigma_a(s);
    json out{{"type", s.type().name()}, {"size", sa.size()}};
    json members = json::array();
    for (int b : sa) members.push_back(format_root(s.root(b)));
    out["members"] = members;
    bool ok = true;
    if (is_a_even(s.type())) {
        out["note"] = "no (C1)-free Sigma_a exists";
        out["maximal"] = is_maximal_so(s, sa);
        ok = is_maximal_so(s, sa);
    } else {
        const auto table = sigma_table(s);
        const auto res = is_conjugate_subset_of(s, sa, table);
        ok = res.value && sa.size() == table.size();
        out["table"] = format_set(s, table);
        out["matches_table"] = ok;
        json word = json::array();
        for (int j : res.word) word.push_back(j + 1);
        out["certificate"] = word;
    }
    if (format == "json") {
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << out["type"].get<std::string>() << ": " << sa.size() << " members\n";
        for (const auto& m : out["members"]) std::cout << "  " << m.get<std::string>() << "\n";
        if (out.contains("note")) std::cout << "note: " << out["note"].get<std::string>() << "\n";
        else {
            std::cout << "table: " << out["table"].get<std::string>() << "\n";
            std::cout << "matches table: " << (ok ? "yes" : "no") << ", certificate word: " << out["certificate"].dump() << "\n";
        }
    }
    return ok ? 0 : 1;
}

int cmd_verify(const std::string& suite, long q, int radius, const std::string& json_out)
{
    if (q < 3 || q % 2 == 0) throw usage_error("q must be an odd integer >= 3");
    if (radius < 0) throw usage_error("radius must be nonnegative");
    if (!is_prime(q)) {
        long p = 2;
        while (q % p) ++p;
        long m = q;
        while (m % p == 0) m /= p;
        if (m != 1) std::cerr << "warning: q = " << q << " is not a prime power\n";
    }
    const std::map<std::string, std::function<report()>> suites{
        {"apartment", [] { return suite_apartment(); }},
        {"cochain", [&] { return suite_cochain(q); }},
        {"rootsys", [] { return suite_rootsys(); }},
        {"series", [&] { return suite_series(q, radius); }},
        {"sorth", [] { return suite_sorth(); }},
        {"tree", [&] { return suite_tree(q, radius); }},
    };
    std::vector<report> reports;
    if (suite == "all") {
        for (const auto& [name, run] : suites) reports.push_back(run());
    } else {
        const auto it = suites.find(suite);
        if (it == suites.end()) throw usage_error("unknown suite " + suite);
        reports.push_back(it->second());
    }
    bool ok = true;
    json doc = reports.size() == 1 ? to_json(reports[0]) : json::array();
    if (reports.size() > 1)
        for (const auto& r : reports) doc.push_back(to_json(r));
    for (const auto& r : reports) {
        std::size_t pass = 0, fail = 0, skip = 0;
        for (const auto& c : r.checks) {
            if (c.status == "pass") ++pass;
            else if (c.status == "fail") {
                ++fail;
                std::cout << "FAIL " << c.id << ": " << c.value << " != " << c.expected << "\n";
            } else ++skip;
        }
        std::cout << r.suite << ": " << pass << " pass, " << fail << " fail, " << skip << " skip\n";
        ok = ok && r.ok();
    }
    if (!json_out.empty()) {
        std::ofstream f(json_out);
        if (!f) throw usage_error("cannot write " + json_out);
        f << doc.dump(2) << "\n";
    }
    return ok ? 0 : 1;
}

int cmd_tables(bool sract, bool eic, bool r1r2, const std::string& format)
{
    if (sract + eic + r1r2 != 1) throw usage_error("choose exactly one of --sract, --eic, --r1r2");
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
    if (sract) {
        header = {"type", "coroot", "computed", "table", "match"};
        for (auto t : sign_types()) {
            root_system s(t);
            const auto sigma = sigma_table_signs(s);
            const auto ref = sract_reference(t);
            const int r = static_cast<int>(sigma.size());
            for (int k = 0; k < s.rank(); ++k) {
                const std::string computed = format_sign_vector(coroot_action(s, sigma, coroot(s, k)), r);
                std::string table = "-", match = "-";
                if (ref[k]) {
                    bool in_range = true;
                    sign_vector v = 0;
                    for (int i : *ref[k]) {
                        if (i > r) in_range = false;
                        else v |= basis_vector(i - 1);
                    }
                    if (in_range) {
                        table = format_sign_vector(v, r);
                        match = table == computed ? "yes" : "no";
                    } else {
                        table = "out of range";
                        match = "no";
                    }
                }
                rows.push_back({t.name(), std::to_string(k + 1), computed, table, match});
            }
        }
    } else if (eic) {
        header = {"type", "computed", "table", "match"};
        for (auto t : sign_types()) {
            const auto sol = solve_for(root_system(t));
            const std::string c = sol.st == character_solution::status::unique ? format_character(sol.chi) : "none";
            const std::string ref = format_character(eic_character(t));
            rows.push_back({t.name(), c, ref, c == ref ? "yes" : "no"});
        }
    } else {
        header = {"type", "r1", "r2", "table_r1", "table_r2", "match"};
        for (auto [t, r1, r2] : std::vector<std::tuple<root_system_type, int, int>>{{{'A', 3}, 4, 2}, {{'D', 5}, 8, 4}, {{'E', 6}, 8, 4}}) {
            const auto res = r1_r2(root_system(t));
            rows.push_back({t.name(), std::to_string(res.r1), std::to_string(res.r2), std::to_string(r1), std::to_string(r2),
                            res.r1 == r1 && res.r2 == r2 ? "yes" : "no"});
        }
    }
    write_flat(std::cout, header, rows, format);
    return 0;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact checks for strongly orthogonal roots, apartments, cochains and series"};
    app.require_subcommand(1);

    std::string family, format = "text";
    int rank = 0;
    auto* sa = app.add_subcommand("sigma-a", "print Sigma_a for a root system");
    sa->add_option("type", family, "family letter")->required();
    sa->add_option("rank", rank, "rank")->required();
    sa->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));

    std::string suite, json_out;
    long q = 3;
    int radius = 10;
    auto* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("suite", suite, "rootsys, sorth, apartment, cochain, series, tree or all")
        ->required()
        ->check(CLI::IsMember({"rootsys", "sorth", "apartment", "cochain", "series", "tree", "all"}));
    verify->add_option("--q", q, "residue field size");
    verify->add_option("--radius", radius, "ball radius");
    verify->add_option("--json", json_out, "write the report to this file");

    bool sract = false, eic = false, r1r2 = false;
    std::string table_format = "markdown";
    auto* tables = app.add_subcommand("tables", "emit computed tables next to the reference tables");
    tables->add_flag("--sract", sract, "coroot action on Sigma_a");
    tables->add_flag("--eic", eic, "sign character");
    tables->add_flag("--r1r2", r1r2, "r1 and r2");
    tables->add_option("--format", table_format, "json, csv or markdown")->check(CLI::IsMember({"json", "csv", "markdown"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : exit_usage;
    }

    try {
        if (*sa) return cmd_sigma_a(family, rank, format);
        if (*verify) return cmd_verify(suite, q, radius, json_out);
        return cmd_tables(sract, eic, r1r2, table_format);
    } catch (const usage_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.code() == errc::invalid_rank || e.code() == errc::budget_exceeded || e.code() == errc::invalid_argument ? exit_usage : 1;
    }
}
