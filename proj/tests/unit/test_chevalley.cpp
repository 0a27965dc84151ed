#include <gtest/gtest.h>

#include <cstdlib>

#include "verma/chevalley.hpp"

using namespace verma;

TEST(RootString, Examples)
{
    RootSystem a2('A', 2);
    EXPECT_EQ(root_string(a2, 0, 1), std::make_pair(0, 1));
    RootSystem g2('G', 2);
    EXPECT_EQ(root_string(g2, 0, 1), std::make_pair(0, 3));
    RootSystem a3('A', 3);
    EXPECT_EQ(root_string(a3, 0, 2), std::make_pair(0, 0));
    EXPECT_THROW(root_string(a3, 0, 0), std::invalid_argument);
    EXPECT_THROW(root_string(a3, 0, a3.negate(0)), std::invalid_argument);
}

TEST(RootString, DifferenceMatchesPairing)
{
    RootSystem f4('F', 4);
    for (int a = 0; a < f4.num_roots(); ++a)
        for (int b = 0; b < f4.num_roots(); ++b) {
            if (a == b || a == f4.negate(b)) continue;
            auto [p, q] = root_string(f4, a, b);
            EXPECT_EQ(p - q, f4.pairing(b, a));
        }
}

TEST(Constants, A2Convention)
{
    RootSystem rs('A', 2);
    StructureConstants N(rs);
    EXPECT_EQ(N(0, 1), 1);
    EXPECT_EQ(N(1, 0), -1);
}

TEST(Constants, G2MaxMagnitude)
{
    RootSystem rs('G', 2);
    StructureConstants N(rs);
    int mx = 0;
    for (int a = 0; a < rs.num_roots(); ++a)
        for (int b = 0; b < rs.num_roots(); ++b) mx = std::max(mx, std::abs(N(a, b)));
    EXPECT_EQ(mx, 3);
}

TEST(Constants, FullJacobiSmallRank)
{
    for (auto [t, n] : std::vector<std::pair<char, int>>{{'A', 1}, {'A', 3}, {'B', 2}, {'B', 3}, {'C', 3}, {'G', 2}}) {
        RootSystem rs(t, n);
        StructureConstants N(rs);
        auto rep = check_constants(N, 0);
        SCOPED_TRACE(rs.name());
        EXPECT_TRUE(rep.ok()) << rep.jacobi_failed << " of " << rep.jacobi_checked;
    }
}

TEST(Constants, RandomJacobiAllTypes)
{
    std::vector<std::pair<char, int>> types{{'A', 8}, {'B', 5}, {'C', 4}, {'D', 4}, {'D', 6}, {'E', 6}, {'E', 7}, {'E', 8}, {'F', 4}};
    for (auto [t, n] : types) {
        RootSystem rs(t, n);
        StructureConstants N(rs);
        auto rep = check_constants(N, 1000, 7);
        SCOPED_TRACE(rs.name());
        EXPECT_TRUE(rep.ok()) << rep.jacobi_failed << " of " << rep.jacobi_checked;
    }
}

TEST(Constants, JacobiOnAdmissibleTriples)
{
    // Triples whose pairwise sums are roots, where Jacobi has content.
    RootSystem rs('F', 4);
    StructureConstants N(rs);
    int checked = 0;
    for (int a = 0; a < rs.num_roots(); ++a)
        for (int b = 0; b < rs.num_roots(); ++b) {
            if (!rs.sum(a, b)) continue;
            for (int c = 0; c < rs.num_roots(); ++c) {
                if (!rs.sum(b, c) && !rs.sum(a, c)) continue;
                ASSERT_TRUE(jacobi_holds(N, a, b, c));
                ++checked;
            }
        }
    EXPECT_GT(checked, 1000);
}

TEST(Constants, Deterministic)
{
    RootSystem rs('E', 6);
    StructureConstants a(rs), b(rs);
    for (int i = 0; i < rs.num_roots(); ++i)
        for (int j = 0; j < rs.num_roots(); ++j) EXPECT_EQ(a(i, j), b(i, j));
}

TEST(Constants, ExtraspecialPairsArePositive)
{
    RootSystem rs('B', 4);
    StructureConstants N(rs);
    for (int g = rs.rank(); g < rs.num_positive(); ++g) {
        auto [a, b] = N.extraspecial()[g];
        EXPECT_EQ(N(a, b), root_string(rs, a, b).first + 1);
    }
}

TEST(Bracket, CorootAndWeights)
{
    RootSystem rs('C', 2);
    StructureConstants N(rs);
    for (int b = 0; b < rs.num_positive(); ++b) {
        auto h = bracket(N, LieElement::root_vector(rs, b), LieElement::root_vector(rs, rs.negate(b)));
        EXPECT_EQ(h, LieElement::coroot(rs, b));
    }
    auto e = bracket(N, LieElement::cartan(rs, 1), LieElement::root_vector(rs, 0));
    EXPECT_EQ(e, LieElement::root_vector(rs, 0) * Rational(rs.pairing(0, 1)));
}
