#include "wzcert/errors.hpp"
#include "wzcert/qseries.hpp"
#include "wzcert/summation.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace wzcert;

namespace {

const std::vector<EtaFactor> kAperyEta{{2, 4}, {4, 4}};

Series random_sparse(std::mt19937& rng, std::int64_t n, bool unit_constant)
{
    std::vector<Integer> c(static_cast<std::size_t>(n) + 1);
    std::uniform_int_distribution<int> coef(-9, 9), pick(0, 4);
    for (auto& x : c)
        if (pick(rng) == 0)
            x = coef(rng);
    if (unit_constant)
        c[0] = pick(rng) % 2 == 0 ? 1 : -1;
    return Series(std::move(c));
}

std::vector<int> small_primes(int limit)
{
    std::vector<int> out;
    for (int p = 3; p <= limit; p += 2) {
        bool prime = true;
        for (int d = 3; d * d <= p; d += 2)
            prime = prime && p % d != 0;
        if (prime)
            out.push_back(p);
    }
    return out;
}

}  // namespace

TEST(EtaExpand, AperySeries)
{
    Series s = eta_expand(kAperyEta, 1, 8);
    EXPECT_EQ(s.truncation(), 8);
    EXPECT_EQ(s[0], 0);
    EXPECT_EQ(s[1], 1);
    EXPECT_EQ(s[3], -4);
    EXPECT_EQ(s[5], -2);
    EXPECT_EQ(s[7], 24);
    for (int i : {2, 4, 6, 8})
        EXPECT_EQ(s[i], 0) << i;
}

TEST(EtaExpand, EvenCoefficientsVanish)
{
    Series s = eta_expand(kAperyEta, 1, 400);
    for (int i = 0; i <= 400; i += 2)
        ASSERT_EQ(s[i], 0) << i;
}

TEST(EtaExpand, MatchesDirectProduct)
{
    // the same product by full series multiplication
    const std::int64_t n = 60;
    Series direct = Series::one(n);
    for (const auto& f : kAperyEta)
        for (std::int64_t j = 1; f.multiplier * j <= n; ++j) {
            Series factor = Series::one(n);
            std::vector<Integer> c = factor.coeffs();
            c[static_cast<std::size_t>(f.multiplier * j)] = -1;
            for (int e = 0; e < f.exponent; ++e)
                direct = direct * Series(c);
        }
    Series s = eta_expand(kAperyEta, 0, n);
    EXPECT_EQ(s, direct);
}

TEST(EtaExpand, EmptyProductAndNegativeExponents)
{
    Series one = eta_expand({}, 0, 5);
    EXPECT_EQ(one, Series::one(5));
    // 1/prod(1-q^j) counts partitions
    Series p = eta_expand({{1, -1}}, 0, 10);
    const int partitions[] = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42};
    for (int i = 0; i <= 10; ++i)
        EXPECT_EQ(p[i], partitions[i]);
    EXPECT_EQ(eta_expand({{1, 1}}, 0, 30) * p, Series::one(10));
    EXPECT_EQ(eta_expand({{3, -2}}, 0, 40).invert(), eta_expand({{3, 2}}, 0, 40));
}

TEST(EtaExpand, Preconditions)
{
    EXPECT_THROW(eta_expand({}, 3, 2), PreconditionError);
    EXPECT_THROW(eta_expand({}, -1, 2), PreconditionError);
    EXPECT_THROW(eta_expand({{0, 1}}, 0, 2), PreconditionError);
}

TEST(Series, Basics)
{
    Series a(std::vector<Integer>{1, 2, 3});
    Series b(std::vector<Integer>{1, -1, 0, 5});
    EXPECT_EQ((a * b).truncation(), 2);
    EXPECT_EQ(a * b, Series(std::vector<Integer>{1, 1, 1}));
    EXPECT_EQ(a + b, Series(std::vector<Integer>{2, 1, 3}));
    EXPECT_THROW(a[3], std::out_of_range);
    EXPECT_THROW(Series(std::vector<Integer>{2, 1}).invert(), DomainError);
}

TEST(Series, RingLaws)
{
    std::mt19937 rng(7);
    for (int round = 0; round < 20; ++round) {
        std::int64_t n = std::uniform_int_distribution<std::int64_t>(0, 200)(rng);
        Series a = random_sparse(rng, n, false), b = random_sparse(rng, n, false),
               c = random_sparse(rng, n, false);
        ASSERT_EQ(a * b, b * a);
        ASSERT_EQ((a * b) * c, a * (b * c));
        ASSERT_EQ(a * (b + c), a * b + a * c);
        ASSERT_EQ(a * Series::one(n), a);
    }
}

TEST(Series, Inversion)
{
    std::mt19937 rng(11);
    for (int round = 0; round < 20; ++round) {
        std::int64_t n = std::uniform_int_distribution<std::int64_t>(0, 200)(rng);
        Series a = random_sparse(rng, n, true);
        ASSERT_EQ(a * a.invert(), Series::one(n));
    }
}

TEST(Apery, Values)
{
    EXPECT_EQ(apery(0), 1);
    EXPECT_EQ(apery(1), 5);
    EXPECT_EQ(apery(2), 73);
    EXPECT_EQ(apery(3), 1445);
    EXPECT_THROW(apery(-1), PreconditionError);
}

TEST(AperyMod, Examples)
{
    EXPECT_EQ(apery_mod(3, 7), Residue(24, 49));
    EXPECT_EQ(apery_mod(0, 5), Residue(1, 25));
    EXPECT_EQ(apery_mod(2, 5), Residue(23, 25));
    EXPECT_THROW(apery_mod(5, 5), PreconditionError);
    EXPECT_THROW(apery_mod(1, 9), PreconditionError);
    EXPECT_THROW(apery_mod(1, 2), PreconditionError);
}

TEST(AperyMod, AgreesWithExactValues)
{
    for (int p : small_primes(200)) {
        const Integer m = Integer(p) * p;
        for (int n = 0; n < p; ++n)
            ASSERT_EQ(apery_mod(n, p), Residue(apery(n), m)) << n << " mod " << p;
    }
}

TEST(Apery, SatisfiesTheTelescopedRecurrence)
{
    Telescoped z = zeilberger(parse_term("(n+k)!^2/(k!^4*(n-k)!^2)"), 2);
    std::vector<Rational> values;
    for (int n = 0; n <= 100; ++n)
        values.emplace_back(apery(n));
    for (const auto& r : apply_recurrence(z.recurrence, values))
        ASSERT_EQ(r, 0);
}
