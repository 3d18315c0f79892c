#include "wzcert/numeric.hpp"

#include "wzcert/errors.hpp"

#include <mutex>
#include <ostream>
#include <vector>

namespace wzcert {

Rational make_rational(const Integer& num, const Integer& den)
{
    if (den == 0)
        throw DomainError("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

Rational parse_rational(const std::string& text)
{
    Rational r;
    if (text.empty() || r.set_str(text, 10) != 0 || r.get_den() == 0)
        throw DomainError("not a rational literal: '" + text + "'");
    r.canonicalize();
    return r;
}

std::string to_string(const Integer& value) { return value.get_str(); }

std::string to_string(const Rational& value) { return value.get_str(); }

namespace {

constexpr std::int64_t kHarmonicCacheLimit = 1 << 15;

std::mutex harmonic_mutex;
std::vector<Rational> harmonic_cache{Rational(0)};

}  // namespace

Rational harmonic(std::int64_t m)
{
    if (m < 0)
        throw DomainError("harmonic number of negative index " + std::to_string(m));
    if (m > kHarmonicCacheLimit) {
        Rational h = harmonic(kHarmonicCacheLimit);
        for (std::int64_t i = kHarmonicCacheLimit + 1; i <= m; ++i)
            h += Rational(1, static_cast<unsigned long>(i));
        return h;
    }
    std::lock_guard lock(harmonic_mutex);
    while (static_cast<std::int64_t>(harmonic_cache.size()) <= m) {
        auto i = static_cast<unsigned long>(harmonic_cache.size());
        harmonic_cache.push_back(harmonic_cache.back() + Rational(1, i));
    }
    return harmonic_cache[static_cast<std::size_t>(m)];
}

Integer binomial(std::int64_t n, std::int64_t k)
{
    if (n < 0)
        throw DomainError("binomial with negative n");
    if (k < 0 || k > n)
        return 0;
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

Integer factorial(std::int64_t n)
{
    if (n < 0)
        throw DomainError("factorial of negative integer");
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

Residue::Residue(const Integer& value, const Integer& modulus) : modulus_(modulus)
{
    if (modulus < 2)
        throw DomainError("residue modulus must be at least 2");
    mpz_fdiv_r(value_.get_mpz_t(), value.get_mpz_t(), modulus.get_mpz_t());
}

Residue Residue::operator+(const Residue& other) const
{
    if (modulus_ != other.modulus_)
        throw DomainError("residue moduli differ");
    return Residue(value_ + other.value_, modulus_);
}

Residue Residue::operator*(const Residue& other) const
{
    if (modulus_ != other.modulus_)
        throw DomainError("residue moduli differ");
    return Residue(value_ * other.value_, modulus_);
}

std::ostream& operator<<(std::ostream& os, const Residue& r)
{
    return os << r.value() << " mod " << r.modulus();
}

Residue mod_inverse(const Integer& a, const Integer& m)
{
    if (m < 2)
        throw DomainError("modulus must be at least 2");
    // invariant: old_r = old_s * a (mod m), r = s * a (mod m)
    Integer old_r = a % m;
    if (old_r < 0)
        old_r += m;
    Integer r = m, old_s = 1, s = 0;
    while (r != 0) {
        Integer q = old_r / r;
        Integer t = old_r - q * r;
        old_r = r;
        r = t;
        t = old_s - q * s;
        old_s = s;
        s = t;
    }
    if (old_r != 1)
        throw NotInvertibleError(a.get_str() + " is not invertible modulo " + m.get_str());
    return Residue(old_s, m);
}

}  // namespace wzcert
