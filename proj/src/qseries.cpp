#include "wzcert/qseries.hpp"

#include "wzcert/errors.hpp"

#include <algorithm>
#include <stdexcept>

namespace wzcert {

Series::Series(std::int64_t truncation)
{
    if (truncation < 0)
        throw PreconditionError("negative truncation");
    c_.assign(static_cast<std::size_t>(truncation) + 1, Integer(0));
}

Series::Series(std::vector<Integer> coeffs) : c_(std::move(coeffs))
{
    if (c_.empty())
        throw PreconditionError("a series needs at least one coefficient");
}

Series Series::one(std::int64_t truncation)
{
    Series s(truncation);
    s.c_[0] = 1;
    return s;
}

const Integer& Series::operator[](std::int64_t i) const
{
    if (i < 0 || i > truncation())
        throw std::out_of_range("coefficient " + std::to_string(i) + " beyond truncation "
                                + std::to_string(truncation()));
    return c_[static_cast<std::size_t>(i)];
}

Series Series::truncated(std::int64_t truncation) const
{
    if (truncation > this->truncation())
        throw PreconditionError("cannot extend a truncated series");
    return Series(std::vector<Integer>(c_.begin(), c_.begin() + truncation + 1));
}

Series Series::invert() const
{
    const Integer& c0 = c_[0];
    if (c0 != 1 && c0 != -1)
        throw DomainError("series with constant term " + c0.get_str() + " is not invertible");
    const std::size_t len = c_.size();
    std::vector<Integer> b(len);
    b[0] = c0;  // 1/c0 = c0 for a unit
    Integer acc;
    for (std::size_t i = 1; i < len; ++i) {
        acc = 0;
        for (std::size_t j = 1; j <= i; ++j)
            if (c_[j] != 0)
                acc += c_[j] * b[i - j];
        b[i] = -c0 * acc;
    }
    return Series(std::move(b));
}

Series operator+(const Series& a, const Series& b)
{
    const std::int64_t n = std::min(a.truncation(), b.truncation());
    Series r(n);
    for (std::int64_t i = 0; i <= n; ++i)
        r.c_[static_cast<std::size_t>(i)] = a.c_[static_cast<std::size_t>(i)] + b.c_[static_cast<std::size_t>(i)];
    return r;
}

Series operator-(const Series& a, const Series& b)
{
    const std::int64_t n = std::min(a.truncation(), b.truncation());
    Series r(n);
    for (std::int64_t i = 0; i <= n; ++i)
        r.c_[static_cast<std::size_t>(i)] = a.c_[static_cast<std::size_t>(i)] - b.c_[static_cast<std::size_t>(i)];
    return r;
}

Series operator*(const Series& a, const Series& b)
{
    const std::size_t len = static_cast<std::size_t>(std::min(a.truncation(), b.truncation())) + 1;
    Series r(static_cast<std::int64_t>(len) - 1);
    for (std::size_t i = 0; i < len; ++i) {
        if (a.c_[i] == 0)
            continue;
        for (std::size_t j = 0; i + j < len; ++j)
            if (b.c_[j] != 0)
                r.c_[i + j] += a.c_[i] * b.c_[j];
    }
    return r;
}

Series eta_expand(const std::vector<EtaFactor>& factors, std::int64_t lead, std::int64_t truncation)
{
    if (lead < 0 || truncation < lead)
        throw PreconditionError("eta_expand needs truncation >= lead >= 0");
    for (const auto& f : factors)
        if (f.multiplier < 1)
            throw PreconditionError("eta multipliers must be at least 1");

    const std::int64_t m = truncation - lead;
    std::vector<Integer> c(static_cast<std::size_t>(m) + 1);
    c[0] = 1;
    for (const auto& f : factors) {
        for (std::int64_t d = f.multiplier; d <= m; d += f.multiplier) {
            const auto du = static_cast<std::size_t>(d);
            for (int e = 0; e < f.exponent; ++e)  // times (1 - q^d)
                for (std::size_t i = c.size() - 1; i >= du; --i)
                    c[i] -= c[i - du];
            for (int e = 0; e > f.exponent; --e)  // times 1/(1 - q^d) = 1 + q^d + q^2d + ...
                for (std::size_t i = du; i < c.size(); ++i)
                    c[i] += c[i - du];
        }
    }
    std::vector<Integer> out(static_cast<std::size_t>(truncation) + 1);
    std::copy(c.begin(), c.end(), out.begin() + lead);
    return Series(std::move(out));
}

Integer apery(std::int64_t n)
{
    if (n < 0)
        throw PreconditionError("apery(n) needs n >= 0");
    Integer sum = 0, b;
    for (std::int64_t k = 0; k <= n; ++k) {
        b = binomial(n, k) * binomial(n + k, k);
        sum += b * b;
    }
    return sum;
}

Residue apery_mod(std::int64_t n, const Integer& p)
{
    if (p < 3 || mpz_even_p(p.get_mpz_t()) != 0 || mpz_probab_prime_p(p.get_mpz_t(), 30) == 0)
        throw PreconditionError("apery_mod needs an odd prime, got " + p.get_str());
    if (n < 0 || Integer(static_cast<long>(n)) >= p)
        throw PreconditionError("apery_mod needs 0 <= n < p");
    const Integer m = p * p;
    // fact[i] = i! mod p^2 for i <= 2n; inv[i] = (i!)^-1 for i <= n (coprime to p)
    std::vector<Integer> fact(static_cast<std::size_t>(2 * n) + 1);
    fact[0] = 1;
    for (std::size_t i = 1; i < fact.size(); ++i)
        fact[i] = fact[i - 1] * static_cast<unsigned long>(i) % m;
    std::vector<Integer> inv(static_cast<std::size_t>(n) + 1);
    inv[static_cast<std::size_t>(n)] = mod_inverse(fact[static_cast<std::size_t>(n)], m).value();
    for (std::size_t i = static_cast<std::size_t>(n); i > 0; --i)
        inv[i - 1] = inv[i] * static_cast<unsigned long>(i) % m;

    Integer sum = 0, term;
    for (std::int64_t k = 0; k <= n; ++k) {
        const auto ku = static_cast<std::size_t>(k);
        // C(n,k) C(n+k,k) = (n+k)! / (k!^2 (n-k)!)
        term = fact[static_cast<std::size_t>(n) + ku] * inv[ku] % m;
        term = term * inv[ku] % m;
        term = term * inv[static_cast<std::size_t>(n) - ku] % m;
        sum += term * term % m;
    }
    return Residue(sum, m);
}

}  // namespace wzcert
