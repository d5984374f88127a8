#include <gtest/gtest.h>

#include "steinberg/series.hpp"

using namespace steinberg;

namespace {

power_series as_series(std::initializer_list<int> xs)
{
    power_series out;
    for (int x : xs) out.emplace_back(x);
    return out;
}

} // namespace

TEST(Series, ClosedFormExamples)
{
    EXPECT_EQ(poincare_closed(root_system({'A', 1}), 4), as_series({1, 2, 2, 2, 2}));
    EXPECT_EQ(poincare_closed(root_system({'A', 2}), 3), as_series({1, 3, 6, 9}));
    EXPECT_EQ(poincare_closed(root_system({'E', 8}), 0), as_series({1}));
}

TEST(Series, ClosedEqualsBfs)
{
    for (auto t : std::vector<root_system_type>{{'A', 1}, {'A', 2}, {'C', 2}, {'G', 2}, {'A', 3}, {'B', 3}}) {
        root_system s(t);
        const auto c = poincare_closed(s, 10);
        EXPECT_EQ(c, poincare_bfs(s, 10)) << t.name();
        for (const auto& x : c) EXPECT_GE(x, 0);
    }
    EXPECT_EQ(poincare_bfs(root_system({'G', 2}), 8), poincare_closed(root_system({'G', 2}), 8));
}

TEST(Series, TypeAClosedForm)
{
    for (int d = 1; d <= 5; ++d) EXPECT_EQ(poincare_type_a(d, 12), poincare_closed(root_system({'A', d}), 12)) << d;
}

TEST(Series, SValue)
{
    EXPECT_EQ(s_value(1, rational(1, 2)), 3);
    EXPECT_EQ(s_value(0, rational(2, 7)), 1);
    EXPECT_EQ(s_value(2, rational(1, 9)), (1 - pow(rational(1, 9), 3)) / pow(rational(8, 9), 3));
    for (int d = 0; d < 5; ++d)
        for (int k = 1; k < 10; ++k) EXPECT_GT(s_value(d, rational(k, 10)), 0);
    try {
        s_value(1, rational(1));
        FAIL();
    } catch (const error& e) {
        EXPECT_EQ(e.code(), errc::domain_error);
    }
    EXPECT_THROW(s_value(1, rational(-3, 2)), error);
}

TEST(Series, TailBound)
{
    root_system a2({'A', 2});
    EXPECT_LT(tail_bound(a2, 3, 10, 3), rational(1, 10));
    EXPECT_LT(tail_bound(a2, 3, 12, 3), rational(1, 100));
    for (int r = 0; r < 14; ++r) {
        EXPECT_GE(tail_bound(a2, 3, r, 3), tail_bound(a2, 3, r + 1, 3));
        if (r >= 4) {
            EXPECT_GT(tail_bound(a2, 3, r, 3), tail_bound(a2, 5, r, 3));
        }
    }
    const auto p = poincare_closed(a2, 60);
    rational direct = 0;
    for (int l = 11; l <= 60; ++l) direct += rational(p[l]) * pow(rational(3), 3 - l);
    EXPECT_LE(direct, tail_bound(a2, 3, 10, 3));
}

TEST(Series, LambdaTrivialRadius)
{
    const auto r = lambda_a2n_partial(1, 3, 0);
    ASSERT_EQ(r.partial_sums.size(), 1u);
    EXPECT_EQ(r.partial_sums[0], 1);
}

TEST(Series, LambdaMatchesBruteForce)
{
    root_system a2({'A', 2});
    const long q = 3;
    const int R = 5;
    const auto [cf, ce] = base_chambers(a2);
    const auto c0 = central_chambers_bruteforce(a2, cf).at(0);
    std::vector<rational> expected(R + 1, rational(0));
    for (const auto& e : chambers_within(a2, cf, R)) {
        const auto cen = central_chambers_bruteforce(a2, e.c);
        ASSERT_EQ(cen.size(), 1u);
        const rational term = pow(rational(q), e.dist) * pow(rational(-q), -static_cast<long>(distance(a2, c0, cen[0])));
        for (int r = e.dist; r <= R; ++r) expected[r] += term;
    }
    EXPECT_EQ(lambda_a2n_partial(1, q, R).partial_sums, expected);
}

TEST(Series, LambdaCertified)
{
    for (long q : {3L, 5L, 7L}) {
        const auto r = lambda_a2n_partial(1, q, 12);
        EXPECT_TRUE(r.certified(6)) << q;
        for (int R = 6; R < 12; ++R) EXPECT_LE(abs(r.partial_sums[R + 1] - r.partial_sums[R]), r.tail_bounds[R]);
        EXPECT_LE(abs(r.partial_sums[12] - 1), r.tail_bounds[12]);
        EXPECT_LT(r.tail_bounds[12], rational(1, 100));
    }
    EXPECT_THROW(lambda_a2n_partial(1, 4, 3), error);
}

TEST(Series, LambdaA4Small)
{
    const auto r = lambda_a2n_partial(2, 3, 4);
    EXPECT_EQ(r.partial_sums[0], 1);
    EXPECT_EQ(r.partial_sums.size(), 5u);
}

TEST(Series, LambdaTvoth)
{
    EXPECT_EQ(lambda_tvoth(root_system({'G', 2}), 3, 5), 5);
    EXPECT_EQ(lambda_tvoth(root_system({'A', 3}), 3, 2), 2 * (1 - pow(rational(3), -4)) / pow(1 - pow(rational(3), -2), 2));
    EXPECT_EQ(lambda_tvoth(root_system({'A', 3}), 3, 1), rational(5, 4));
    for (auto t : std::vector<root_system_type>{{'A', 3}, {'A', 5}, {'D', 5}, {'E', 6}, {'B', 3}, {'E', 8}})
        for (long q : {3L, 5L, 9L}) EXPECT_NE(lambda_tvoth(root_system(t), q, 1), 0);
    try {
        lambda_tvoth(root_system({'A', 2}), 3, 1);
        FAIL();
    } catch (const error& e) {
        EXPECT_EQ(e.code(), errc::not_applicable);
    }
}

TEST(Series, WeylOrder)
{
    EXPECT_EQ(weyl_order(root_system({'A', 3})), 24);
    EXPECT_EQ(weyl_order(root_system({'E', 8})), bigint(696729600));
}
