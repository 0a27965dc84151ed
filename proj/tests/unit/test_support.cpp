#include <gtest/gtest.h>

#include <atomic>

#include "verma/acceptance.hpp"

using namespace verma;

TEST(Support, ParallelForCoversEveryIndex)
{
    std::vector<int> hits(257, 0);
    parallel_for(hits.size(), [&](std::size_t i) { hits[i] += static_cast<int>(i); }, 4);
    for (std::size_t i = 0; i < hits.size(); ++i) EXPECT_EQ(hits[i], static_cast<int>(i));
    EXPECT_THROW(parallel_for(10, [](std::size_t i) { if (i == 7) throw std::runtime_error("x"); }, 3), std::runtime_error);
}

TEST(Support, WeightsBelowCount)
{
    RootSystem rs('A', 3);
    // ν ∈ ℕ³ with 0 < |ν| ≤ 8.
    EXPECT_EQ(weights_below(rs, zero_weight(rs), 8).size(), 164u);
    RootSystem b2('B', 2);
    auto below = weights_below(b2, zero_weight(b2), 1);
    ASSERT_EQ(below.size(), 2u);
    EXPECT_EQ(below[0], zero_weight(b2) - root_weight(b2, 1));
}

TEST(Support, SweepMixesWeightClasses)
{
    std::mt19937_64 rng(3);
    for (auto [t, n] : TypeList{{'A', 1}, {'A', 2}, {'B', 2}, {'A', 3}}) {
        RootSystem rs(t, n);
        auto sweep = linkage_sweep(rs, rng);
        EXPECT_GE(sweep.size(), 30u) << rs.name();
        int integral = 0, walls = 0, other = 0;
        for (const auto& w : sweep) {
            bool all_int = std::all_of(w.coords.begin(), w.coords.end(), [](const Rational& c) { return is_integer(c); });
            integral += all_int;
            other += !all_int;
            for (int g = 0; g < rs.num_positive(); ++g)
                if (coroot_pairing(rs, w + rho(rs), g) == 0) {
                    ++walls;
                    break;
                }
        }
        EXPECT_GT(integral, 0) << rs.name();
        EXPECT_GE(walls, 6) << rs.name();
        EXPECT_GT(other, 0) << rs.name();
    }
}

TEST(Support, SimpleTypeLists)
{
    EXPECT_EQ(simple_types(4).size(), 13u);
    EXPECT_EQ(simple_types(8).size(), 8u + 7u + 7u + 5u + 3u + 2u);
}
