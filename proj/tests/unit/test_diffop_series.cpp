#include <gtest/gtest.h>

#include "verma/diffop.hpp"
#include "verma/series.hpp"

using namespace verma;

namespace {

Polynomial mono(std::vector<int> e, const Rational& c = 1) { return {{e, c}}; }

}  // namespace

TEST(DiffOp, CanonicalCommutator)
{
    DiffOp d = DiffOp::partial(1, 0), x = DiffOp::x(1, 0);
    EXPECT_EQ(commutator(d, x), DiffOp::constant(1, 1));
    EXPECT_EQ(commutator(x, d), DiffOp::constant(1, -1));
}

TEST(DiffOp, LeibnizOnPowers)
{
    // ∂^2 x^3 = x^3 ∂^2 + 6 x^2 ∂ + 6 x
    DiffOp lhs = DiffOp::partial(1, 0, 2) * DiffOp::x(1, 0, 3);
    DiffOp rhs(1);
    rhs.add_term({3}, {2}, 1);
    rhs.add_term({2}, {1}, 6);
    rhs.add_term({1}, {0}, 6);
    EXPECT_EQ(lhs, rhs);
}

TEST(DiffOp, ComposeMatchesApplication)
{
    DiffOp a(2), b(2);
    a.add_term({1, 0}, {0, 1}, Rational(2, 3));
    a.add_term({0, 2}, {1, 0}, -1);
    b.add_term({0, 1}, {1, 1}, 5);
    b.add_term({2, 0}, {0, 0}, Rational(1, 2));
    Polynomial f;
    add_to(f, {3, 2}, 1);
    add_to(f, {1, 4}, -7);
    add_to(f, {0, 1}, Rational(3, 5));
    EXPECT_TRUE(act(a * b, f) == act(a, act(b, f)));
    Polynomial p = act(a, act(b, f));
    for (const auto& [e, c] : act(b, act(a, f))) add_to(p, e, -c);
    EXPECT_TRUE(act(commutator(a, b), f) == p);
}

TEST(DiffOp, Associativity)
{
    DiffOp a(2), b(2), c(2);
    a.add_term({0, 1}, {2, 0}, 1);
    b.add_term({3, 0}, {0, 1}, -2);
    b.add_term({0, 0}, {1, 0}, 1);
    c.add_term({1, 1}, {0, 0}, 4);
    EXPECT_EQ((a * b) * c, a * (b * c));
}

TEST(DiffOp, Text)
{
    DiffOp a(2);
    a.add_term({1, 0}, {0, 2}, Rational(-1, 2));
    a.add_term({0, 0}, {0, 0}, 3);
    EXPECT_EQ(a.str(), "3 - 1/2*x1*d2^2");
    EXPECT_EQ(DiffOp(2).str(), "0");
}

class SeriesTest : public ::testing::Test {
protected:
    void SetUp() override
    {
        RootSystem a2('A', 2);
        layout = VariableLayout::make(a2, lex_ordering(a2));
    }
    std::shared_ptr<const VariableLayout> layout;
};

TEST_F(SeriesTest, FractionalExponents)
{
    // Positions: lex puts α1+α2 first, then α1, α2.
    ASSERT_FALSE(layout->simple[0]);
    Series s = Series::monomial(layout, {Rational(0), Rational(1, 3), Rational(2)});
    Series t = s.times_power(1, Rational(-2));
    auto e = t.exponents(t.terms().begin()->first);
    EXPECT_EQ(e[1], Rational(-5, 3));
    EXPECT_EQ(e[2], 2);
    EXPECT_THROW(s.times_power(0, Rational(1, 2)), std::invalid_argument);
    EXPECT_THROW(s + Series::one(layout), std::invalid_argument);
}

TEST_F(SeriesTest, ApplyMatchesPolynomial)
{
    DiffOp d(3);
    d.add_term({1, 0, 0}, {0, 1, 1}, 2);
    d.add_term({0, 0, 1}, {0, 0, 0}, -1);
    Polynomial f = mono({0, 2, 3}, 5);
    add_to(f, {1, 1, 0}, 1);
    Series s = Series::from_polynomial(layout, f);
    EXPECT_TRUE(act(d, s).to_polynomial() == act(d, f));
    EXPECT_TRUE(act(d, s).exact());
}

TEST_F(SeriesTest, DepthAccounting)
{
    // x_{α1+α2}∂_{α1}∂_{α2} raises the non-simple height by 2.
    DiffOp raise(3), lower(3);
    raise.add_term({1, 0, 0}, {0, 1, 1}, 1);
    lower.add_term({0, 1, 1}, {1, 0, 0}, 1);
    Series s = Series::monomial(layout, {Rational(1), Rational(1, 2), Rational(3)}).truncated(2);
    EXPECT_EQ(depth_cost(raise, *layout), -2);
    EXPECT_EQ(*act(raise, s).depth(), 4);
    EXPECT_EQ(*act(lower, s).depth(), 0);
    EXPECT_THROW(act(lower, act(lower, s)), DepthExhausted);
}

TEST_F(SeriesTest, AgreementWithinDepth)
{
    Series a = Series::monomial(layout, {Rational(0), Rational(1, 2), Rational(0)});
    Series b = a + Series::monomial(layout, {Rational(3), Rational(1, 2), Rational(0)});
    EXPECT_FALSE(a.agrees_with(b));
    EXPECT_TRUE(a.truncated(4).agrees_with(b.truncated(2)));
    EXPECT_TRUE(a.truncated(4).agrees_with(b.truncated(6)));
    EXPECT_FALSE(a.truncated(8).agrees_with(b.truncated(6)));
}

TEST_F(SeriesTest, LeadingTerm)
{
    Polynomial f = mono({1, 0, 0}, 2);
    add_to(f, {0, 1, 1}, 3);
    add_to(f, {0, 0, 1}, 1);
    Series lt = Series::from_polynomial(layout, f).leading_term();
    Polynomial want = mono({0, 1, 1}, 3);
    EXPECT_TRUE(lt.to_polynomial() == want);
}

TEST_F(SeriesTest, WeightOf)
{
    RootSystem a2('A', 2);
    Weight lam{{Rational(1), Rational(2)}};
    Series s = Series::monomial(layout, {Rational(1), Rational(0), Rational(0)});
    EXPECT_EQ(*weight_of(s, a2, lam), lam - root_weight(a2, 2));
    Series mixed = Series::from_polynomial(layout, [] {
        Polynomial p = mono({1, 0, 0});
        add_to(p, {0, 1, 0}, 1);
        return p;
    }());
    EXPECT_FALSE(weight_of(mixed, a2, lam).has_value());
}
