#include <gtest/gtest.h>

#include <random>

#include "oracle.hpp"
#include "steinberg/apartment.hpp"

using namespace steinberg;

namespace {

int at(const root_system& s, const chamber& c, std::vector<int> r) { return c.h[s.index(r)]; }

chamber a1_e(const root_system& a1, int h_alpha)
{
    chamber c{level::E, std::vector<int>(2)};
    c.h[a1.index(std::vector<int>{1})] = h_alpha;
    c.h[a1.index(std::vector<int>{-1})] = 1 - h_alpha;
    return c;
}

} // namespace

TEST(Apartment, BaseChambers)
{
    root_system a1({'A', 1});
    auto [f, e] = base_chambers(a1);
    EXPECT_EQ(at(a1, f, {1}), 0);
    EXPECT_EQ(at(a1, f, {-1}), 2);
    EXPECT_EQ(at(a1, e, {1}), 0);
    EXPECT_EQ(at(a1, e, {-1}), 1);
    for (auto t : oracle::all_types(4)) {
        root_system s(t);
        auto [bf, be] = base_chambers(s);
        EXPECT_TRUE(is_chamber(s, bf));
        EXPECT_TRUE(is_chamber(s, be));
    }
}

TEST(Apartment, DistanceExamples)
{
    root_system a1({'A', 1});
    auto [f, e] = base_chambers(a1);
    EXPECT_EQ(distance(a1, e, e), 0);
    const auto w = walls(a1, e);
    ASSERT_EQ(w.size(), 2u);
    for (const auto& fw : w) EXPECT_EQ(distance(a1, e, fw.across), 1);
    const std::vector<int> xi{1};
    EXPECT_EQ(at(a1, translate(a1, e, xi), {1}), 4);
    EXPECT_EQ(distance(a1, e, translate(a1, e, xi)), 4);
    EXPECT_EQ(distance(a1, f, translate(a1, f, xi)), 2);
    try {
        distance(a1, e, f);
        FAIL();
    } catch (const error& x) {
        EXPECT_EQ(x.code(), errc::level_mismatch);
    }
}

TEST(Apartment, DistanceIsGalleryLength)
{
    for (auto t : oracle::all_types(3)) {
        root_system s(t);
        for (const auto& c0 : {base_chambers(s).first, base_chambers(s).second}) {
            const auto ball = chambers_within(s, c0, 4);
            for (const auto& e : ball) {
                EXPECT_EQ(distance(s, c0, e.c), e.dist) << t.name();
                EXPECT_TRUE(is_chamber(s, e.c));
            }
            for (std::size_t i = 0; i < ball.size(); i += 3)
                for (std::size_t j = 0; j < ball.size(); j += 2) {
                    const int dij = distance(s, ball[i].c, ball[j].c);
                    EXPECT_EQ(dij, distance(s, ball[j].c, ball[i].c));
                    EXPECT_EQ(dij == 0, i == j);
                    EXPECT_LE(dij, ball[i].dist + ball[j].dist);
                }
        }
    }
}

TEST(Apartment, TranslateAndReflect)
{
    root_system g2({'G', 2});
    auto [f, e] = base_chambers(g2);
    EXPECT_EQ(translate(g2, e, std::vector<int>{0, 0}), e);
    const auto moved = translate(g2, e, std::vector<int>{2, -1});
    EXPECT_TRUE(is_chamber(g2, moved));
    EXPECT_EQ(distance(g2, e, moved) % 2, 0);
    for (const auto& fw : walls(g2, moved)) {
        EXPECT_EQ(reflect(g2, fw.across, fw.w), moved);
        EXPECT_EQ(reflect(g2, reflect(g2, e, fw.w), fw.w), e);
    }
    try {
        reflect(g2, f, {g2.simple(0), 1});
        FAIL();
    } catch (const error& x) {
        EXPECT_EQ(x.code(), errc::not_a_wall);
    }
    root_system a1({'A', 1});
    const auto e1 = base_chambers(a1).second;
    EXPECT_EQ(reflect(a1, e1, {a1.simple(0), 0}), a1_e(a1, 1));
    EXPECT_EQ(reflect(a1, e1, {a1.simple(0), 1}), a1_e(a1, -1));
}

TEST(Apartment, BallCounts)
{
    root_system a1({'A', 1});
    EXPECT_EQ(chambers_within(a1, base_chambers(a1).second, 0).size(), 1u);
    EXPECT_EQ(chambers_within(a1, base_chambers(a1).second, 2).size(), 5u);
    root_system a2({'A', 2});
    std::vector<int> cnt(4);
    for (const auto& e : chambers_within(a2, base_chambers(a2).second, 3)) ++cnt[e.dist];
    EXPECT_EQ(cnt, (std::vector<int>{1, 3, 6, 9}));
}

TEST(Apartment, EChambersInFChamber)
{
    for (auto [t, n] : std::vector<std::pair<root_system_type, std::size_t>>{{{'A', 1}, 2}, {{'A', 2}, 4}, {{'A', 4}, 16}, {{'C', 2}, 4}, {{'G', 2}, 4}, {{'B', 3}, 8}}) {
        root_system s(t);
        const auto cf = base_chambers(s).first;
        const auto inner = e_chambers_in_f_chamber(s, cf);
        EXPECT_EQ(inner.size(), n) << t.name();
        for (const auto& c : inner) EXPECT_TRUE(inside(c, cf));
    }
}

TEST(Apartment, CentralChambers)
{
    root_system a2({'A', 2});
    const auto cf = base_chambers(a2).first;
    const auto bf = central_chambers_bruteforce(a2, cf);
    ASSERT_EQ(bf.size(), 1u);
    const auto c = central_chamber(a2, cf);
    EXPECT_EQ(c, bf[0]);
    EXPECT_EQ(at(a2, c, {-1, 0}), 1);
    EXPECT_EQ(at(a2, c, {1, 1}), -1);
    EXPECT_EQ(at(a2, c, {0, -1}), 1);
    root_system a4({'A', 4});
    const auto bf4 = central_chambers_bruteforce(a4, base_chambers(a4).first);
    ASSERT_EQ(bf4.size(), 1u);
    EXPECT_EQ(central_chamber(a4, base_chambers(a4).first), bf4[0]);
    root_system a3({'A', 3});
    EXPECT_TRUE(central_chambers_bruteforce(a3, base_chambers(a3).first).empty());
    try {
        central_chamber(a3, base_chambers(a3).first);
        FAIL();
    } catch (const error& x) {
        EXPECT_EQ(x.code(), errc::not_type_a2n);
    }
}

TEST(Apartment, CentralFormulaAwayFromBase)
{
    for (int d : {2, 4}) {
        root_system s({'A', d});
        for (const auto& e : chambers_within(s, base_chambers(s).first, 2)) {
            const auto bf = central_chambers_bruteforce(s, e.c);
            ASSERT_EQ(bf.size(), 1u);
            EXPECT_EQ(central_chamber(s, e.c), bf[0]);
        }
    }
}

TEST(Apartment, Dis3)
{
    for (int d : {2, 4}) {
        root_system s({'A', d});
        const auto cf = base_chambers(s).first;
        const auto c0 = central_chamber(s, cf);
        const auto ws = walls(s, cf);
        EXPECT_EQ(ws.size(), static_cast<std::size_t>(d + 1));
        for (const auto& fw : ws) EXPECT_EQ(distance(s, c0, central_chamber(s, fw.across)), 3);
    }
}

TEST(Apartment, DoubledDistance)
{
    std::mt19937 rng(12345);
    std::uniform_int_distribution<int> u(-3, 3);
    for (auto t : std::vector<root_system_type>{{'A', 2}, {'C', 2}, {'G', 2}}) {
        root_system s(t);
        auto [f, e] = base_chambers(s);
        const auto inner = e_chambers_in_f_chamber(s, f);
        for (int trial = 0; trial < 100; ++trial) {
            std::vector<int> xi(s.rank());
            for (int& x : xi) x = u(rng);
            const int df = distance(s, f, translate(s, f, xi));
            for (const auto& c : inner) EXPECT_EQ(distance(s, c, translate(s, c, xi)), 2 * df) << t.name();
        }
    }
}

TEST(Apartment, ParityIdentity)
{
    for (auto t : std::vector<root_system_type>{{'A', 2}, {'A', 3}, {'A', 4}, {'B', 3}, {'C', 2}, {'G', 2}}) {
        root_system s(t);
        for (const auto& e : chambers_within(s, base_chambers(s).second, 3))
            EXPECT_EQ(simple_set_weighted_sum(s, e.c), rational(1, 2)) << t.name();
    }
}

TEST(Apartment, CanonicalChamber)
{
    root_system a1({'A', 1});
    const auto c1 = canonical_sigma_chamber(a1, sigma_table(a1));
    EXPECT_EQ(at(a1, c1, {1}), -1);
    EXPECT_EQ(at(a1, c1, {-1}), 2);
    for (auto t : oracle::table_types()) {
        root_system s(t);
        const auto sigma = sigma_table_signs(s);
        const auto c0 = canonical_sigma_chamber(s, sigma);
        EXPECT_TRUE(is_chamber(s, c0)) << t.name();
        for (int b : sigma) EXPECT_EQ(c0.h[b] % 2, 0) << t.name();
        std::vector<root_vec> ext;
        for (int r : chamber_simple_set(s, c0)) ext.push_back(s.root(r));
        auto want = extended_simple_set(s);
        std::sort(ext.begin(), ext.end());
        std::sort(want.begin(), want.end());
        EXPECT_EQ(ext, want) << t.name();
    }
    root_system b2({'B', 2});
    try {
        canonical_sigma_chamber(b2, {b2.simple(0)});
        FAIL();
    } catch (const error& x) {
        EXPECT_EQ(x.code(), errc::unsupported_sigma);
    }
}

TEST(Apartment, FacetFunctionalHalfIntegral)
{
    for (auto t : oracle::table_types()) {
        root_system s(t);
        const auto sigma = sigma_table_signs(s);
        if (static_cast<int>(sigma.size()) != s.rank()) continue;
        const auto c0 = canonical_sigma_chamber(s, sigma);
        const auto vals = facet_values(sigma, c0);
        facet_functional ff(s, sigma, vals);
        for (std::size_t i = 0; i < sigma.size(); ++i) EXPECT_EQ(ff(sigma[i]), vals[i]);
        for (int a = 0; a < s.size(); ++a) {
            EXPECT_EQ(ff(a) + ff(s.neg(a)), 0);
            EXPECT_TRUE(is_integer(2 * ff(a)));
        }
    }
}

TEST(Apartment, FacetFunctionalExamples)
{
    root_system d4({'D', 4});
    const auto sigma = sigma_table(d4);
    try {
        facet_functional(d4, sigma, {rational(1, 2), rational(0), rational(0), rational(0)});
        FAIL();
    } catch (const error& x) {
        EXPECT_EQ(x.code(), errc::half_integrality_violation);
    }
    const rational h(1, 2);
    facet_functional ff(d4, sigma, {h, h, h, h});
    int half_sums = 0;
    for (int a = 0; a < d4.size(); ++a) {
        const auto lam = ff.coefficients(a);
        if (std::all_of(lam.begin(), lam.end(), [](const rational& x) { return abs(x) == rational(1, 2); })) ++half_sums;
        EXPECT_TRUE(is_integer(2 * ff(a)));
    }
    EXPECT_GT(half_sums, 0);
    root_system g2({'G', 2});
    facet_functional fg(g2, sigma_table(g2), {rational(1, 2), rational(-1, 2)});
    for (int a = 0; a < g2.size(); ++a) EXPECT_TRUE(is_integer(2 * fg(a)));
    root_system b2({'B', 2});
    EXPECT_THROW(facet_functional(b2, sigma_table(b2), {rational(1, 3), rational(0)}), error);
}
