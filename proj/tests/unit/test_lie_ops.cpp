#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "verma/lie_ops.hpp"

using namespace verma;

namespace {

Weight random_weight(const RootSystem& rs, std::mt19937& rng)
{
    std::uniform_int_distribution<int> num(-9, 9), den(1, 4);
    Weight w = zero_weight(rs);
    for (auto& c : w.coords) c = Rational(num(rng), den(rng));
    for (auto& c : w.coords) c.canonicalize();
    return w;
}

// Operator of the coroot H_β = Σ_i b_i |α_i|²/|β|² H_i.
DiffOp coroot_op(const LieOps& ops, int beta)
{
    const RootSystem& rs = ops.roots();
    DiffOp h(ops.vars());
    RootCoords b = rs.coords(beta);
    for (int i = 0; i < rs.rank(); ++i)
        if (b[i]) h += ops.zeta(i) * (b[i] * rs.norm2(i) / rs.norm2(beta));
    return h;
}

// [E_r, E_s] for all root pairs, at operator level.
void expect_chevalley_relations(const LieOps& ops)
{
    const RootSystem& rs = ops.roots();
    const StructureConstants& N = ops.constants();
    const int m = ops.vars();
    for (int r = 0; r < rs.num_roots(); ++r)
        for (int s = r + 1; s < rs.num_roots(); ++s) {
            DiffOp lhs = commutator(ops.root_op(r), ops.root_op(s));
            DiffOp rhs(m);
            if (s == rs.negate(r))
                rhs = coroot_op(ops, r);
            else if (auto t = rs.sum(r, s))
                rhs = ops.root_op(*t) * Rational(N(r, s));
            ASSERT_EQ(lhs, rhs) << rs.name() << " roots " << r << "," << s;
        }
    for (int i = 0; i < rs.rank(); ++i)
        for (int r = 0; r < rs.num_roots(); ++r) {
            DiffOp lhs = commutator(ops.zeta(i), ops.root_op(r));
            int p = rs.is_positive(r) ? rs.pairing(r, i) : -rs.pairing(rs.negate(r), i);
            ASSERT_EQ(lhs, ops.root_op(r) * Rational(p)) << rs.name() << " H" << i << " root " << r;
        }
}

}  // namespace

TEST(LieOps, HighestRootIsMultiplication)
{
    for (auto [t, n] : std::vector<std::pair<char, int>>{{'A', 3}, {'B', 3}, {'C', 3}, {'D', 4}, {'G', 2}}) {
        RootSystem rs(t, n);
        StructureConstants N(rs);
        EtaTable eta(rs, N, lex_ordering(rs));
        int theta = rs.num_positive() - 1;
        EXPECT_EQ(eta.eta(theta), DiffOp::x(rs.num_positive(), eta.ordering().position[theta])) << rs.name();
    }
}

TEST(LieOps, Sl2Raising)
{
    RootSystem rs('A', 1);
    StructureConstants N(rs);
    Rational lam(7, 3);
    LieOps ops(rs, N, lex_ordering(rs), Weight{{lam}});
    EXPECT_EQ(ops.eta(0), DiffOp::x(1, 0));
    for (int k = 0; k < 6; ++k) {
        Polynomial f{{{k}, 1}}, want;
        if (k > 0) add_to(want, {k - 1}, Rational(k) * (lam - k + 1));
        EXPECT_TRUE(act(ops.d(0), f) == want) << k;
    }
    EXPECT_EQ(ops.zeta(0).str(), "7/3 - 2*x1*d1");
}

TEST(LieOps, LexOrderingIsGood)
{
    std::vector<std::pair<char, int>> types{{'A', 1}, {'A', 2}, {'A', 3}, {'A', 4}, {'B', 2}, {'B', 3}, {'B', 4},
                                            {'C', 3}, {'C', 4}, {'D', 4}, {'F', 4}, {'G', 2}};
    for (auto [t, n] : types) {
        RootSystem rs(t, n);
        StructureConstants N(rs);
        EXPECT_TRUE(verify_good_ordering(EtaTable(rs, N, lex_ordering(rs)))) << rs.name();
    }
}

TEST(LieOps, ScrambledC2Orderings)
{
    RootSystem rs('C', 2);
    StructureConstants N(rs);
    std::vector<int> perm(rs.num_positive());
    std::iota(perm.begin(), perm.end(), 0);
    int good = 0, total = 0;
    do {
        good += verify_good_ordering(EtaTable(rs, N, make_ordering(rs, perm)));
        ++total;
    } while (std::next_permutation(perm.begin(), perm.end()));
    EXPECT_EQ(total, 24);
    EXPECT_GT(good, 0);
    EXPECT_LT(good, 24);
    EXPECT_TRUE(verify_good_ordering(EtaTable(rs, N, sp_ordering(rs))));
}

TEST(LieOps, OperatorShapes)
{
    std::mt19937 rng(11);
    for (auto [t, n] : std::vector<std::pair<char, int>>{{'A', 3}, {'B', 3}, {'C', 3}, {'D', 4}, {'G', 2}, {'F', 4}}) {
        RootSystem rs(t, n);
        StructureConstants N(rs);
        LieOps ops(rs, N, lex_ordering(rs), random_weight(rs, rng));
        for (int b = 0; b < rs.num_positive(); ++b) {
            EXPECT_TRUE(eta_shape_ok(ops.eta_table(), b)) << rs.name() << " eta " << b;
            EXPECT_TRUE(d_shape_ok(ops, b)) << rs.name() << " d " << b;
        }
    }
}

TEST(LieOps, ChevalleyRelations)
{
    std::mt19937 rng(5);
    for (auto [t, n] : std::vector<std::pair<char, int>>{{'A', 1}, {'A', 2}, {'A', 3}, {'B', 2}, {'B', 3}, {'C', 3}, {'G', 2}}) {
        RootSystem rs(t, n);
        StructureConstants N(rs);
        expect_chevalley_relations(LieOps(rs, N, lex_ordering(rs), random_weight(rs, rng)));
    }
    RootSystem c2('C', 2);
    StructureConstants N(c2);
    expect_chevalley_relations(LieOps(c2, N, sp_ordering(c2), random_weight(c2, rng)));
}

TEST(LieOps, SimpleRelations)
{
    RootSystem rs('D', 4);
    StructureConstants N(rs);
    std::mt19937 rng(3);
    LieOps ops(rs, N, lex_ordering(rs), random_weight(rs, rng));
    for (int a = 0; a < rs.rank(); ++a) {
        EXPECT_EQ(commutator(ops.d(a), ops.eta(a)), ops.zeta(a));
        for (int b = 0; b < rs.num_positive(); ++b)
            EXPECT_EQ(commutator(ops.zeta(a), ops.eta(b)), ops.eta(b) * Rational(-rs.pairing(b, a)));
    }
}

TEST(LieOps, RejectsWrongWeight)
{
    RootSystem rs('A', 2);
    StructureConstants N(rs);
    EXPECT_THROW(LieOps(rs, N, lex_ordering(rs), Weight{{Rational(1)}}), std::invalid_argument);
}
