#include <gtest/gtest.h>

#include <random>

#include "verma/oracle.hpp"

using namespace verma;

TEST(Oracle, Sl2Straightening)
{
    RootSystem rs('A', 1);
    StructureConstants N(rs);
    Rational lam(7, 3);
    PBWModule M(rs, N, lex_ordering(rs), Weight{{lam}});
    for (int k = 0; k <= 6; ++k) {
        const Polynomial& p = M.act_root(0, Exponents{k});
        if (k == 0) {
            EXPECT_TRUE(p.empty());
            continue;
        }
        ASSERT_EQ(p.size(), 1u);
        EXPECT_EQ(p.begin()->first, Exponents{k - 1});
        EXPECT_EQ(p.begin()->second, Rational(k) * (lam - k + 1));
    }
}

TEST(Oracle, LoweringKeepsPbwOrder)
{
    RootSystem rs('A', 2);
    StructureConstants N(rs);
    PBWModule M(rs, N, lex_ordering(rs), zero_weight(rs));
    // Positions are [α1+α2, α1, α2].
    EXPECT_EQ(M.act_root(rs.negate(0), Exponents{0, 0, 1}).size(), 1u);
    const Polynomial& p = M.act_root(rs.negate(1), Exponents{0, 1, 0});
    Exponents ordered{0, 1, 1}, top{1, 0, 0};
    ASSERT_EQ(p.size(), 2u);
    EXPECT_EQ(p.at(ordered), 1);
    EXPECT_EQ(abs(p.at(top)), 1);
}

TEST(Oracle, CartanActsByWeight)
{
    RootSystem rs('B', 2);
    StructureConstants N(rs);
    PBWModule M(rs, N, lex_ordering(rs), Weight{{Rational(1, 2), Rational(-2)}});
    Exponents a{1, 0, 2, 1};
    Weight w = M.weight(a);
    Polynomial v{{a, Rational(3)}};
    for (int i = 0; i < 2; ++i) {
        Polynomial h = M.act(Generator::cartan(i), v);
        EXPECT_EQ(h.at(a), 3 * w.coords[i]);
    }
}

TEST(Oracle, TauConjugatesRealization)
{
    std::mt19937_64 rng(31);
    for (auto [t, n] : std::vector<std::pair<char, int>>{{'A', 2}, {'A', 3}, {'B', 2}, {'C', 3}, {'G', 2}}) {
        RootSystem rs(t, n);
        StructureConstants N(rs);
        Ordering ord = lex_ordering(rs);
        Weight lam = zero_weight(rs);
        for (auto& c : lam.coords) c = random_rational(rng);
        LieOps ops(rs, N, ord, lam);
        PBWModule M(rs, N, ord, lam);
        for (int trial = 0; trial < 20; ++trial) {
            FreeLieWord u = random_word(rs, rng);
            Polynomial f = random_polynomial(ord.size(), rng);
            EXPECT_TRUE(tau_apply_check(u, f, ops, M)) << rs.name() << " trial " << trial;
        }
    }
}

TEST(Oracle, KernelMatchesLinkage)
{
    for (auto [t, n] : std::vector<std::pair<char, int>>{{'A', 2}, {'B', 2}}) {
        RootSystem rs(t, n);
        StructureConstants N(rs);
        std::vector<Weight> sweep{zero_weight(rs), Weight{{Rational(1), Rational(0)}}, Weight{{Rational(-1), Rational(2)}},
                                  Weight{{Rational(1, 2), Rational(1)}}};
        for (const auto& lam : sweep) {
            PBWModule M(rs, N, lex_ordering(rs), lam);
            LieOps ops(rs, N, lex_ordering(rs), lam);
            for (const auto& w : weyl_group_elements(rs)) {
                Weight mu = dot_action(rs, w, lam);
                if (mu == lam) continue;
                auto ker = singular_kernel(M, mu);
                EXPECT_LE(ker.size(), 1u);
                EXPECT_EQ(!ker.empty(), strongly_linked(rs, lam, mu).has_value()) << rs.name() << " " << join_rationals(lam.coords);
                for (const auto& v : ker) EXPECT_TRUE(verify_singular(v, ops));
            }
        }
    }
}

TEST(Oracle, KernelAgreesWithWeylAction)
{
    RootSystem rs('B', 2);
    StructureConstants N(rs);
    Weight lam{{Rational(2), Rational(1)}};
    PBWModule M(rs, N, lex_ordering(rs), lam);
    LieOps ops(rs, N, lex_ordering(rs), lam);
    for (const auto& w : weyl_group_elements(rs)) {
        auto r = solve_singular(ops, w, 2);
        if (!r.polynomial() || r.mu == lam) continue;
        auto ker = singular_kernel(M, r.mu);
        ASSERT_EQ(ker.size(), 1u);
        EXPECT_TRUE(ker.front().proportional_to(*r.vector));
    }
}
