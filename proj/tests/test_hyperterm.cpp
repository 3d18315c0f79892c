#include "wzcert/errors.hpp"
#include "wzcert/hyperterm.hpp"

#include <gtest/gtest.h>

using namespace wzcert;

namespace {

const Poly n = Poly::var(Var::n);
const Poly k = Poly::var(Var::k);
const char* kIdentityTerm = "k*(n+k)!^2/(k!^4*(n-k)!^2)";

}  // namespace

TEST(ParseTerm, IdentityTerm)
{
    HyperTerm t = parse_term(kIdentityTerm);
    std::vector<FactorialPower> expected{{{1, 1, 0}, 2}, {{0, 1, 0}, -4}, {{1, -1, 0}, -2}};
    EXPECT_EQ(t.factors(), expected);
    EXPECT_EQ(t.prefactor(), k);
    // Maple spelling with ** and a flat chain of divisions
    EXPECT_EQ(parse_term("k*(n+k)!**2/k!**4/(n-k)!**2"), t);
}

TEST(ParseTerm, Binomial)
{
    HyperTerm t = parse_term("n!/(k!*(n-k)!)");
    std::vector<FactorialPower> expected{{{1, 0, 0}, 1}, {{0, 1, 0}, -1}, {{1, -1, 0}, -1}};
    EXPECT_EQ(t.factors(), expected);
    EXPECT_EQ(t.prefactor(), Poly(1));
}

TEST(ParseTerm, Errors)
{
    try {
        parse_term("k*((n+k)!");
        FAIL() << "expected a parse error";
    } catch (const ParseError& e) {
        EXPECT_EQ(e.position(), 9u);
    }
    EXPECT_THROW(parse_term("(n*k)!"), ParseError);
    EXPECT_THROW(parse_term("(k^2)!"), ParseError);
    EXPECT_THROW(parse_term("m!"), ParseError);
    EXPECT_THROW(parse_term("n!+k!"), ParseError);
    EXPECT_THROW(parse_term("1/(k+1)"), ParseError);
    EXPECT_THROW(parse_term("(k/2)!"), ParseError);
}

TEST(ParseTerm, CanonicalMerging)
{
    HyperTerm t = parse_term("k!*k!/(k!^3)*(2*n)!*3!");
    std::vector<FactorialPower> expected{{{2, 0, 0}, 1}, {{0, 1, 0}, -1}};
    EXPECT_EQ(t.factors(), expected);
    EXPECT_EQ(t.prefactor(), Poly(6));
}

TEST(ParseTerm, RenderRoundTrip)
{
    for (const char* s : {kIdentityTerm, "n!/(k!*(n-k)!)", "(n+k)!^2/(k!^4*(n-k)!^2)",
                          "(k^2+n)*(2*n-k+1)!/(n+k-1)!", "1/(k!*(k+1)!)", "3/2*n*k!"}) {
        HyperTerm t = parse_term(s);
        EXPECT_EQ(parse_term(to_string(t)), t) << s << " -> " << to_string(t);
    }
    EXPECT_EQ(to_string(parse_term(kIdentityTerm)), "k*(n+k)!^2/(k!^4*(n-k)!^2)");
}

TEST(ShiftQuotient, IdentityTerm)
{
    HyperTerm t = parse_term(kIdentityTerm);
    EXPECT_EQ(shift_quotient(t, Var::k),
              RatFunc((n + k + 1).pow(2) * (n - k).pow(2), k * (k + 1).pow(3)));
    EXPECT_EQ(shift_quotient(t, Var::n), RatFunc((n + k + 1).pow(2), (n - k + 1).pow(2)));
}

TEST(ShiftQuotient, Binomial)
{
    HyperTerm t = parse_term("n!/(k!*(n-k)!)");
    EXPECT_EQ(shift_quotient(t, Var::k), RatFunc(n - k, k + 1));
    EXPECT_EQ(shift_quotient(t, Var::n), RatFunc(n + 1, n - k + 1));
}

TEST(EvalTerm, Examples)
{
    HyperTerm t = parse_term(kIdentityTerm);
    EXPECT_EQ(eval_term(t, 1, 1), Rational(4));
    EXPECT_EQ(eval_term(t, 3, 4), Rational(0));
    EXPECT_EQ(eval_term(t, 2, 1), Rational(36));
    EXPECT_THROW(eval_term(t, 1, -3), DomainError);
    for (int nn = 0; nn <= 12; ++nn)
        for (int kk = 0; kk <= nn; ++kk) {
            Integer b = binomial(nn, kk) * binomial(nn + kk, kk);
            ASSERT_EQ(eval_term(t, nn, kk), Rational(kk * b * b));
        }
}

TEST(EvalTerm, SupportConvention)
{
    HyperTerm t = parse_term("n!/(k!*(n-k)!)");
    for (int nn = 0; nn <= 10; ++nn)
        for (int kk = -4; kk <= nn + 4; ++kk) {
            bool outside = kk < 0 || kk > nn;
            ASSERT_EQ(eval_term(t, nn, kk) == 0, outside);
        }
}

TEST(ShiftQuotient, ConsistentWithEvaluation)
{
    for (const char* s : {kIdentityTerm, "n!/(k!*(n-k)!)", "(n+k)!^2/(k!^4*(n-k)!^2)",
                          "(2*n)!/((n-k)!*(n+k)!)", "(k^2+1)*(n+2*k)!/(k!^2*(n+1)!)"}) {
        HyperTerm t = parse_term(s);
        for (Var v : {Var::k, Var::n}) {
            RatFunc q = shift_quotient(t, v);
            for (int n0 = 1; n0 <= 25; ++n0)
                for (int k0 = 0; k0 < n0; ++k0) {
                    Rational quotient;
                    try {
                        quotient = q.eval(n0, k0);
                    } catch (const PoleError&) {
                        continue;
                    }
                    Rational next = v == Var::k ? eval_term(t, n0, k0 + 1) : eval_term(t, n0 + 1, k0);
                    ASSERT_EQ(next, eval_term(t, n0, k0) * quotient) << s << " at " << n0 << "," << k0;
                }
        }
    }
}
