#include <gtest/gtest.h>

#include <random>

#include "verma/sp_formula.hpp"

using namespace verma;

namespace {

Weight dynkin(std::initializer_list<Rational> c) { return Weight{RationalVector(c)}; }

}  // namespace

TEST(Singular, IdentityGivesHighestWeightVector)
{
    RootSystem rs('B', 2);
    StructureConstants N(rs);
    LieOps ops(rs, N, lex_ordering(rs), dynkin({Rational(1, 2), Rational(-3)}));
    auto r = solve_singular(ops, WeylElement{}, 4);
    ASSERT_TRUE(r.polynomial());
    EXPECT_EQ(r.vector->coeffs.size(), 1u);
    EXPECT_EQ(r.vector->coeffs.begin()->first, Exponents(4, 0));
    EXPECT_TRUE(r.consistent());
}

TEST(Singular, Sl2Power)
{
    RootSystem rs('A', 1);
    StructureConstants N(rs);
    for (int k = 1; k <= 5; ++k) {
        LieOps ops(rs, N, lex_ordering(rs), dynkin({Rational(k - 1)}));
        auto r = solve_singular(ops, WeylElement{{0}}, 2);
        ASSERT_TRUE(r.polynomial());
        PBWVector want{ops.lambda(), {{Exponents{k}, Rational(1)}}};
        EXPECT_EQ(*r.vector, want);
    }
    LieOps neg(rs, N, lex_ordering(rs), dynkin({Rational(-3)}));
    auto r = solve_singular(neg, WeylElement{{0}}, 4);
    EXPECT_FALSE(r.polynomial());
    EXPECT_TRUE(r.consistent());
}

TEST(Singular, VerifySingularExamples)
{
    RootSystem rs('A', 1);
    StructureConstants N(rs);
    LieOps k1(rs, N, lex_ordering(rs), dynkin({Rational(0)}));
    LieOps k5(rs, N, lex_ordering(rs), dynkin({Rational(4)}));
    PBWVector one{k1.lambda(), {{Exponents{0}, Rational(1)}}};
    EXPECT_TRUE(verify_singular(one, k1));
    EXPECT_TRUE(verify_singular(PBWVector{k1.lambda(), {{Exponents{1}, Rational(1)}}}, k1));
    EXPECT_FALSE(verify_singular(PBWVector{k5.lambda(), {{Exponents{1}, Rational(1)}}}, k5));

    RootSystem a2('A', 2);
    StructureConstants N2(a2);
    LieOps ops(a2, N2, lex_ordering(a2), zero_weight(a2));
    PBWVector mixed{ops.lambda(), {{Exponents{0, 1, 0}, Rational(1)}, {Exponents{0, 1, 1}, Rational(1)}}};
    EXPECT_THROW(verify_singular(mixed, ops), std::invalid_argument);
}

TEST(Singular, PolynomialIffLinked)
{
    std::mt19937_64 rng(21);
    for (auto [t, n] : std::vector<std::pair<char, int>>{{'A', 2}, {'B', 2}}) {
        RootSystem rs(t, n);
        StructureConstants N(rs);
        std::vector<Weight> sweep{zero_weight(rs), Weight{{Rational(1), Rational(0)}}, Weight{{Rational(-1), Rational(2)}},
                                  Weight{{Rational(-1), Rational(-1)}}, Weight{{Rational(1, 2), Rational(1)}}};
        for (const auto& lam : sweep) {
            LieOps ops(rs, N, lex_ordering(rs), lam);
            for (const auto& w : weyl_group_elements(rs)) {
                auto r = solve_singular(ops, w, 2);
                EXPECT_TRUE(r.consistent()) << rs.name() << " λ=" << join_rationals(lam.coords) << " |w|=" << w.word.size();
                if (r.polynomial()) {
                    EXPECT_TRUE(r.verified);
                    EXPECT_TRUE(is_homogeneous(*r.vector, rs, *ops.layout()));
                }
            }
        }
    }
}

TEST(SpFormula, RealizationMatchesTable)
{
    for (int n : {2, 3, 4}) {
        SpContext ctx(n);
        EXPECT_TRUE(ctx.realization_consistent()) << n;
        for (int b = 0; b < ctx.roots().num_positive(); ++b) EXPECT_TRUE(abs(ctx.twist(b)) == 1) << n << " " << b;
    }
}

TEST(SpFormula, ExampleAtKOne)
{
    // λ_1 = −1, λ_2 = 1 in shifted labels.
    SpContext ctx(2);
    Weight lam = dynkin({Rational(-2), Rational(0)});
    EXPECT_EQ(ctx.k_of(lam), 1);
    PBWVector v = sp_formula(ctx, lam);
    Exponents a(4, 0);
    a[ctx.var(2, 1)] = 1;
    a[ctx.var(4, 2)] = 1;
    ASSERT_EQ(v.coeffs.size(), 1u);
    EXPECT_EQ(v.coeffs.at(a), 1);
}

TEST(SpFormula, DoubleSumAtNTwo)
{
    std::mt19937_64 rng(22);
    SpContext ctx(2);
    for (int k = 1; k <= 4; ++k) {
        Rational l2 = random_rational(rng), l1 = k - 2 * l2;
        Weight lam = dynkin({l1 - 1, l2 - 1});
        PBWVector v = sp_formula(ctx, lam);
        std::size_t count = 0;
        for (int p = 0; 2 * p <= k; ++p)
            for (int q = 0; 2 * p + q <= k; ++q) {
                Exponents a(4, 0);
                a[ctx.var(2, 1)] = k - 2 * p - q;
                a[ctx.var(3, 1)] = p;
                a[ctx.var(4, 1)] = q;
                a[ctx.var(4, 2)] = k - p - q;
                Rational want = falling_factorial(l1 + l2, p + q) * falling_factorial(l1 + 2 * l2, 2 * p + q) /
                                Rational(factorial(p) * factorial(q));
                Rational got = v.coeffs.count(a) ? v.coeffs.at(a) : Rational(0);
                EXPECT_EQ(got, want) << k << " " << p << " " << q;
                count += want != 0;
            }
        EXPECT_EQ(v.coeffs.size(), count);
    }
}

TEST(SpFormula, TranscribedOperatorsAnnihilate)
{
    std::mt19937_64 rng(23);
    for (int n : {2, 3}) {
        SpContext ctx(n);
        for (int k = 1; k <= 3; ++k) {
            Weight lam = zero_weight(ctx.roots());
            Rational rest(0);
            for (int i = 0; i + 1 < n; ++i) {
                lam.coords[i] = random_rational(rng);
                rest += lam.coords[i] + 1;
            }
            lam.coords[n - 1] = (k - rest) / 2 - 1;
            ASSERT_EQ(ctx.k_of(lam), k);
            PBWVector v = sp_formula(ctx, lam);
            for (const auto& d : sp_raising_operators(ctx, lam)) EXPECT_TRUE(act(d, tau(v)).empty()) << n << " " << k;
        }
    }
}

TEST(SpFormula, AgreesWithWeylOrbit)
{
    std::mt19937_64 rng(24);
    for (int n : {2, 3}) {
        SpContext ctx(n);
        for (int k = 1; k <= 3; ++k) {
            Weight lam = zero_weight(ctx.roots());
            Rational rest(0);
            for (int i = 0; i + 1 < n; ++i) {
                lam.coords[i] = random_rational(rng);
                rest += lam.coords[i] + 1;
            }
            lam.coords[n - 1] = (k - rest) / 2 - 1;
            LieOps ops(ctx.roots(), ctx.constants(), ctx.ordering(), lam);
            PBWVector v = sp_to_chevalley(ctx, sp_formula(ctx, lam));
            EXPECT_TRUE(verify_singular(v, ops));
            auto r = solve_singular_root(ops, ctx.top_root(), 0);
            ASSERT_TRUE(r.polynomial()) << n << " " << k;
            EXPECT_TRUE(v.proportional_to(*r.vector)) << n << " " << k;
        }
    }
}

TEST(SpFormula, RejectsNonNaturalK)
{
    SpContext ctx(2);
    EXPECT_THROW(sp_formula(ctx, dynkin({Rational(1, 2), Rational(0)})), std::invalid_argument);
}
