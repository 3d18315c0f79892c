#include "wzcert/errors.hpp"
#include "wzcert/summation.hpp"

#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

using namespace wzcert;

namespace {

const Poly n = Poly::var(Var::n);
const Poly k = Poly::var(Var::k);

// Definite sums over the natural support, by direct evaluation.
std::vector<Rational> definite_sums(const HyperTerm& t, int count)
{
    std::vector<Rational> out;
    for (int n0 = 0; n0 < count; ++n0) {
        Rational s = 0;
        for (int k0 = 0; k0 <= n0; ++k0)
            s += eval_term(t, n0, k0);
        out.push_back(s);
    }
    return out;
}

std::vector<Rational> apery_by_binomials(int count)
{
    std::vector<Rational> out;
    for (int n0 = 0; n0 < count; ++n0) {
        Integer s = 0;
        for (int k0 = 0; k0 <= n0; ++k0) {
            Integer b = binomial(n0, k0) * binomial(n0 + k0, k0);
            s += b * b;
        }
        out.emplace_back(s);
    }
    return out;
}

bool all_zero(const std::vector<Rational>& xs)
{
    for (const auto& x : xs)
        if (x != 0)
            return false;
    return true;
}

// Proportional as vectors over Q(n).
bool proportional(const Recurrence& a, const Recurrence& b)
{
    if (a.order != b.order)
        return false;
    for (int i = 0; i <= a.order; ++i)
        for (int j = 0; j <= a.order; ++j)
            if (a.coeffs[i] * b.coeffs[j] != a.coeffs[j] * b.coeffs[i])
                return false;
    return true;
}

// Rank of a rational matrix, by plain elimination.
std::size_t rank_of(std::vector<std::vector<Rational>> m)
{
    std::size_t rank = 0;
    const std::size_t cols = m.empty() ? 0 : m[0].size();
    for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
        std::size_t p = rank;
        while (p < m.size() && m[p][c] == 0)
            ++p;
        if (p == m.size())
            continue;
        std::swap(m[p], m[rank]);
        for (std::size_t i = rank + 1; i < m.size(); ++i) {
            if (m[i][c] == 0)
                continue;
            Rational f = m[i][c] / m[rank][c];
            for (std::size_t j = c; j < cols; ++j)
                m[i][j] -= f * m[rank][j];
        }
        ++rank;
    }
    return rank;
}

const char* const kTerms[] = {
    "n!/(k!*(n-k)!)",
    "k*n!/(k!*(n-k)!)",
    "n!^2/(k!^2*(n-k)!^2)",
    "(n+k)!/(k!^2*(n-k)!)",
    "n!^3/(k!^3*(n-k)!^3)",
    "(n+k)!^2/(k!^4*(n-k)!^2)",
};

}  // namespace

// ---------------------------------------------------------------- Gosper

TEST(Gosper, KTimesFactorial)
{
    auto r = gosper(parse_ratfunc("(k+1)^2/k"));
    ASSERT_TRUE(r.has_value());
    EXPECT_EQ(*r, RatFunc(Poly(1), k));
    // S = k!, and (k+1)! - k! = k * k!
    for (int k0 = 1; k0 <= 10; ++k0) {
        Rational t0 = k0 * Rational(factorial(k0));
        Rational t1 = (k0 + 1) * Rational(factorial(k0 + 1));
        EXPECT_EQ(r->eval(0, k0 + 1) * t1 - r->eval(0, k0) * t0, t0);
    }
}

TEST(Gosper, ReciprocalOfConsecutiveProduct)
{
    auto r = gosper(parse_ratfunc("k/(k+2)"));
    ASSERT_TRUE(r.has_value());
    EXPECT_EQ(*r, RatFunc(-(k + 1)));
    EXPECT_EQ(to_string(*r), "-(k+1)");
    for (int k0 = 1; k0 <= 10; ++k0) {
        Rational t0(1, k0 * (k0 + 1));
        Rational t1(1, (k0 + 1) * (k0 + 2));
        t0.canonicalize();
        t1.canonicalize();
        EXPECT_EQ(r->eval(0, k0 + 1) * t1 - r->eval(0, k0) * t0, t0);
    }
}

TEST(Gosper, HarmonicIsNotSummable)
{
    EXPECT_FALSE(gosper(parse_ratfunc("k/(k+1)")).has_value());
}

// No rational S = X/Y with deg X, deg Y <= 10 satisfies S(k+1) - S(k) = 1/k:
// such an S equals S(1) + H(k-1) on k >= 1, so X'(k) = Y(k) H(k-1) with
// X' = X - S(1) Y, a nonzero solution (Y = 0 forces X' = 0) of a linear
// system on k = 1..60 that has full rank.
TEST(Gosper, HarmonicOracleHasNoRationalAntidifference)
{
    const int deg = 10;
    std::vector<std::vector<Rational>> m;
    for (int k0 = 1; k0 <= 60; ++k0) {
        std::vector<Rational> row;
        Rational h = harmonic(k0 - 1);
        for (int part = 0; part < 2; ++part) {
            Rational power = 1;
            for (int i = 0; i <= deg; ++i) {
                row.push_back(part == 0 ? power : Rational(-power * h));
                power *= k0;
            }
        }
        m.push_back(std::move(row));
    }
    EXPECT_EQ(rank_of(m), static_cast<std::size_t>(2 * (deg + 1)));
}

TEST(Gosper, Soundness)
{
    const char* ratios[] = {
        "(k+1)^2/k", "k/(k+2)", "k/(k+1)", "2", "(k+1)/(k+3)", "(k+2)/k", "(n-k)/(k+1)",
        "(k-n)/(k+1)", "(k+1)*(2*k+3)/(k*(2*k+1))", "(k+1)^3/(k+2)^3", "(n+k+1)/(n+k+3)",
        "-(n-k)^2*(n+k+1)^2/(k+1)^4",
    };
    int summable = 0;
    for (const char* text : ratios) {
        RatFunc r = parse_ratfunc(text);
        auto big_r = gosper(r);
        if (!big_r)
            continue;
        ++summable;
        EXPECT_EQ(big_r->shifted(Var::k, 1) * r - *big_r, RatFunc(1)) << text;
    }
    EXPECT_GE(summable, 7);
}

// ---------------------------------------------------------------- Zeilberger

TEST(Zeilberger, BinomialRowSum)
{
    HyperTerm t = parse_term("n!/(k!*(n-k)!)");
    Telescoped z = zeilberger(t, 3);
    EXPECT_EQ(z.recurrence.order, 1);
    EXPECT_EQ(z.recurrence.coeffs, (std::vector<Poly>{Poly(-2), Poly(1)}));
    EXPECT_TRUE(verify_certificate(t, std::nullopt, z.recurrence, z.certificate));
    auto sums = definite_sums(t, 21);
    for (int i = 0; i < 21; ++i)
        EXPECT_EQ(sums[i], Rational(Integer(1) << i));
    EXPECT_TRUE(all_zero(apply_recurrence(z.recurrence, sums)));
}

TEST(Zeilberger, AperyCore)
{
    HyperTerm t = parse_term("(n+k)!^2/(k!^4*(n-k)!^2)");
    Telescoped z = zeilberger(t, 3);
    ASSERT_EQ(z.recurrence.order, 2);
    VerificationReport report = verify_certificate_report(t, std::nullopt, z.recurrence, z.certificate);
    EXPECT_TRUE(report.symbolic);
    EXPECT_TRUE(report.numeric);
    EXPECT_EQ(report.numeric_checks, 50);

    // (n+2)^3 u(n+2) - (2n+3)(17n^2+51n+39) u(n+1) + (n+1)^3 u(n) = 0
    Recurrence apery{2, {(n + 1).pow(3), -(2 * n + 3) * (17 * n * n + 51 * n + 39), (n + 2).pow(3)}};
    EXPECT_TRUE(proportional(z.recurrence, apery));

    auto values = apery_by_binomials(101);
    EXPECT_TRUE(all_zero(apply_recurrence(z.recurrence, values)));

    auto guessed = guess_recurrence(std::vector<Rational>(values.begin(), values.begin() + 31), 2, 3);
    ASSERT_TRUE(guessed.has_value());
    EXPECT_TRUE(proportional(*guessed, z.recurrence));
    EXPECT_TRUE(all_zero(apply_recurrence(*guessed, values)));

    // u2 forced by u0 = 1, u1 = 5
    const auto& c = z.recurrence.coeffs;
    Rational u2 = -(c[1].eval(0, 0) * 5 + c[0].eval(0, 0) * 1) / c[2].eval(0, 0);
    EXPECT_EQ(u2, Rational(73));
}

TEST(Zeilberger, SpotCheckAgreesWithSymbolicVerdict)
{
    HyperTerm t = parse_term("(n+k)!^2/(k!^4*(n-k)!^2)");
    Telescoped z = zeilberger(t, 2);
    Rational lhs = 0;
    for (int j = 0; j <= z.recurrence.order; ++j)
        lhs += z.recurrence.coeffs[j].eval(5, 0) * eval_term(t, 5 + j, 2);
    auto g = [&](int k0) -> Rational { return eval_term(t, 5, k0) * z.certificate.r1.eval(5, k0); };
    EXPECT_EQ(lhs, g(3) - g(2));
}

TEST(Zeilberger, SuiteIsSoundAndMinimal)
{
    for (const char* text : kTerms) {
        HyperTerm t = parse_term(text);
        Telescoped z = zeilberger(t, 3);
        EXPECT_TRUE(verify_certificate(t, std::nullopt, z.recurrence, z.certificate)) << text;
        EXPECT_TRUE(all_zero(apply_recurrence(z.recurrence, definite_sums(t, 41)))) << text;
        if (z.recurrence.order > 1)
            EXPECT_THROW(zeilberger(t, z.recurrence.order - 1), NotFoundError) << text;
        EXPECT_GT(z.recurrence.coeffs.back().lead_coeff(), 0) << text;
    }
}

TEST(Zeilberger, Errors)
{
    HyperTerm t = parse_term("n!/(k!*(n-k)!)");
    EXPECT_THROW(zeilberger(t, 0), PreconditionError);
    try {
        zeilberger(parse_term("n!^3/(k!^3*(n-k)!^3)"), 1);
        FAIL() << "expected NotFoundError";
    } catch (const NotFoundError& e) {
        EXPECT_EQ(e.orders_tried(), std::vector<int>{1});
    }
}

TEST(VerifyCertificate, RejectsBrokenCertificates)
{
    HyperTerm t = parse_term("(n+k)!^2/(k!^4*(n-k)!^2)");
    Telescoped z = zeilberger(t, 2);
    Certificate bad = z.certificate;
    bad.r1 += RatFunc(1);
    EXPECT_FALSE(verify_certificate(t, std::nullopt, z.recurrence, bad));
    Recurrence wrong = z.recurrence;
    wrong.coeffs[0] += Poly(1);
    EXPECT_FALSE(verify_certificate(t, std::nullopt, wrong, z.certificate));
    EXPECT_THROW(verify_certificate(t, paper_potential(), z.recurrence, z.certificate),
                 PreconditionError);
}

// ---------------------------------------------------------------- potential

class IdentityTelescoping : public ::testing::Test {
protected:
    static void SetUpTestSuite()
    {
        term_ = new HyperTerm(parse_term("k*(n+k)!^2/(k!^4*(n-k)!^2)"));
        found_ = new Telescoped(zeil_potential(*term_, paper_potential(), 3));
    }
    static void TearDownTestSuite()
    {
        delete found_;
        delete term_;
    }

    static HyperTerm* term_;
    static Telescoped* found_;
};

HyperTerm* IdentityTelescoping::term_ = nullptr;
Telescoped* IdentityTelescoping::found_ = nullptr;

TEST_F(IdentityTelescoping, OrderAtMostThree)
{
    EXPECT_GE(found_->recurrence.order, 1);
    EXPECT_LE(found_->recurrence.order, 3);
    EXPECT_EQ(found_->certificate.kind, Certificate::Kind::potential);
    EXPECT_TRUE(found_->certificate.r2.has_value());
}

TEST_F(IdentityTelescoping, CertificateVerifies)
{
    auto report = verify_certificate_report(*term_, paper_potential(), found_->recurrence,
                                            found_->certificate);
    EXPECT_TRUE(report.symbolic);
    EXPECT_TRUE(report.numeric);
    EXPECT_EQ(report.numeric_checks, 50);
}

TEST_F(IdentityTelescoping, PerturbedCertificateFails)
{
    Certificate bad = found_->certificate;
    *bad.r2 += RatFunc(1);
    EXPECT_FALSE(verify_certificate(*term_, paper_potential(), found_->recurrence, bad));
}

// The telescoped identity summed over k = 1..n+1 (where boundary terms
// vanish) annihilates the sums of t * c.
TEST_F(IdentityTelescoping, AnnihilatesTheSums)
{
    const Potential c = paper_potential();
    std::vector<Rational> sums;
    for (int n0 = 1; n0 <= 30; ++n0) {
        Rational s = 0;
        for (int k0 = 1; k0 <= n0; ++k0)
            s += eval_term(*term_, n0, k0) * eval_potential(c, n0, k0);
        sums.push_back(s);
    }
    EXPECT_TRUE(all_zero(apply_recurrence(found_->recurrence, sums)));
}

TEST_F(IdentityTelescoping, NotFoundBelowTheFoundOrder)
{
    if (found_->recurrence.order > 1)
        EXPECT_THROW(zeil_potential(*term_, paper_potential(), found_->recurrence.order - 1),
                     NotFoundError);
}

TEST_F(IdentityTelescoping, MatchesGoldenFile)
{
    std::ifstream in(WZCERT_GOLDEN_DIR "/identity_recurrence.json");
    ASSERT_TRUE(in.good());
    std::stringstream buf;
    buf << in.rdbuf();
    bool verified = false;
    Telescoped golden = telescoped_from_json(buf.str(), &verified);
    EXPECT_TRUE(verified);
    EXPECT_EQ(golden.recurrence, found_->recurrence);
    EXPECT_EQ(golden.certificate, found_->certificate);
    EXPECT_TRUE(verify_certificate(*term_, paper_potential(), golden.recurrence, golden.certificate));
}

TEST(ZeilPotential, ConstantPotentialReducesToZeilberger)
{
    HyperTerm t = parse_term("n!/(k!*(n-k)!)");
    Telescoped z = zeil_potential(t, Potential({}, RatFunc(3)), 2);
    EXPECT_EQ(z.recurrence.order, 1);
    EXPECT_TRUE(verify_certificate(t, Potential({}, RatFunc(3)), z.recurrence, z.certificate));
}

// Summing the certified identity over k = 0..K leaves the boundary terms:
// sum_j sigma_j(n) sum_k T(n+j,k) = G(n,K+1) - G(n,0).
TEST(ZeilPotential, HarmonicTimesBinomialTelescopes)
{
    HyperTerm t = parse_term("n!/(k!*(n-k)!)");
    Potential c = parse_potential("H(k)");
    Telescoped z = zeil_potential(t, c, 3);
    EXPECT_TRUE(verify_certificate(t, c, z.recurrence, z.certificate));
    const Recurrence& rec = z.recurrence;
    auto big_g = [&](int n0, int k0) -> Rational {
        Rational inner = z.certificate.r1.eval(n0, k0) * eval_potential(c, n0, k0)
                         + z.certificate.r2->eval(n0, k0);
        return eval_term(t, n0, k0) * inner;
    };
    int checked = 0;
    for (int n0 = 1; n0 <= 20; ++n0) {
        const int top = n0 + rec.order;
        Rational lhs = 0;
        for (int j = 0; j <= rec.order; ++j)
            for (int k0 = 0; k0 <= top; ++k0)
                lhs += rec.coeffs[j].eval(n0, 0) * eval_term(t, n0 + j, k0)
                       * eval_potential(c, n0 + j, k0);
        try {
            EXPECT_EQ(lhs, big_g(n0, top + 1) - big_g(n0, 0)) << n0;
            ++checked;
        } catch (const PoleError&) {
        }
    }
    EXPECT_GT(checked, 10);
}

// ---------------------------------------------------------------- guessing

TEST(GuessRecurrence, Constant)
{
    auto r = guess_recurrence(std::vector<Rational>(12, Rational(1)), 1, 0);
    ASSERT_TRUE(r.has_value());
    EXPECT_EQ(r->coeffs, (std::vector<Poly>{Poly(-1), Poly(1)}));
}

TEST(GuessRecurrence, PowersOfTwo)
{
    std::vector<Rational> v;
    for (int i = 0; i < 12; ++i)
        v.emplace_back(Integer(1) << i);
    auto r = guess_recurrence(v, 1, 0);
    ASSERT_TRUE(r.has_value());
    EXPECT_EQ(r->coeffs, (std::vector<Poly>{Poly(-2), Poly(1)}));
}

TEST(GuessRecurrence, NoneAndTooFew)
{
    std::vector<Rational> primes;
    for (int p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43})
        primes.emplace_back(p);
    EXPECT_FALSE(guess_recurrence(primes, 1, 1).has_value());
    EXPECT_THROW(guess_recurrence(std::vector<Rational>(8, Rational(1)), 1, 0), PreconditionError);
}

TEST(ApplyRecurrence, Examples)
{
    Recurrence apery{2, {(n + 1).pow(3), -(2 * n + 3) * (17 * n * n + 51 * n + 39), (n + 2).pow(3)}};
    auto res = apply_recurrence(apery, {Rational(1), Rational(5), Rational(73)});
    EXPECT_EQ(res, std::vector<Rational>{Rational(0)});
    EXPECT_TRUE(all_zero(apply_recurrence(apery, std::vector<Rational>(10))));
    EXPECT_EQ(apply_recurrence(apery, std::vector<Rational>(10)).size(), 8u);
    EXPECT_EQ(apply_recurrence(apery, std::vector<Rational>(10), 3).size(), 5u);
    EXPECT_THROW(apply_recurrence(apery, {Rational(1), Rational(5)}), PreconditionError);
}

TEST(Json, RoundTrip)
{
    HyperTerm t = parse_term("(n+k)!^2/(k!^4*(n-k)!^2)");
    Telescoped z = zeilberger(t, 2);
    std::string text = to_json(z.recurrence, z.certificate, true);
    EXPECT_NE(text.find("\"kind\": \"pure\""), std::string::npos) << text;
    EXPECT_NE(text.find("\"r2\": null"), std::string::npos) << text;
    bool verified = false;
    Telescoped back = telescoped_from_json(text, &verified);
    EXPECT_TRUE(verified);
    EXPECT_EQ(back.recurrence, z.recurrence);
    EXPECT_EQ(back.certificate, z.certificate);
    EXPECT_EQ(to_json(back.recurrence, back.certificate, true), text);
}
