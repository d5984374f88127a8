#include <gtest/gtest.h>

#include "oracle.hpp"
#include "steinberg/prasad.hpp"

using namespace steinberg;

TEST(Prasad, TrivialExamples)
{
    EXPECT_TRUE(prasad_trivial(root_system({'A', 2})));
    EXPECT_FALSE(prasad_trivial(root_system({'A', 1})));
    EXPECT_TRUE(prasad_trivial(root_system({'D', 4})));
}

TEST(Prasad, MatchesHalfSum)
{
    for (auto t : oracle::all_types()) {
        root_system s(t);
        const auto rho = oracle::rho_halfsum(s);
        EXPECT_EQ(rho_from_cartan(s), rho) << t.name();
        const bool integral = std::all_of(rho.begin(), rho.end(), [](const rational& x) { return is_integer(x); });
        EXPECT_EQ(prasad_trivial(s), integral) << t.name();
    }
}

TEST(Prasad, E7Torus)
{
    root_system e7({'E', 7});
    coweight xi{std::vector<rational>(7, rational(0))};
    xi.c[1] = xi.c[4] = xi.c[6] = rational(1, 2);
    EXPECT_EQ(two_rho_pairing(e7, xi), 3);
    EXPECT_EQ(chi_on_torus(e7, xi, true), -1);
    EXPECT_EQ(chi_on_torus(e7, xi, false), 1);
}

TEST(Prasad, CorootsGivePlusOne)
{
    for (auto t : oracle::all_types()) {
        root_system s(t);
        for (int k = 0; k < s.rank(); ++k) EXPECT_EQ(chi_on_torus(s, coroot(s, k), true), 1);
    }
}

TEST(Prasad, NonIntegralPairing)
{
    root_system a1({'A', 1});
    try {
        chi_on_torus(a1, coweight{{rational(1, 4)}}, true);
        FAIL();
    } catch (const error& e) {
        EXPECT_EQ(e.code(), errc::non_integral_pairing);
    }
}

TEST(Prasad, Homomorphism)
{
    root_system c3({'C', 3});
    std::vector<coweight> xs;
    for (int j = 0; j < 3; ++j) xs.push_back(fundamental_coweight(c3, j));
    for (const auto& a : xs)
        for (const auto& b : xs) {
            coweight s{a.c};
            for (int k = 0; k < 3; ++k) s.c[k] += b.c[k];
            EXPECT_EQ(chi_on_torus(c3, s, true), chi_on_torus(c3, a, true) * chi_on_torus(c3, b, true));
        }
}

TEST(Prasad, D2nIdentity)
{
    EXPECT_FALSE(d2n_character_identity(1).has_value());
    for (int n : {2, 3, 4}) EXPECT_EQ(d2n_character_identity(n), std::optional<bool>(true)) << n;
}
