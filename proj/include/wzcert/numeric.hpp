#ifndef WZCERT_NUMERIC_HPP
#define WZCERT_NUMERIC_HPP

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <string>

namespace wzcert {

using Integer = mpz_class;
using Rational = mpq_class;

// Canonical num/den; throws DomainError on a zero denominator.
Rational make_rational(const Integer& num, const Integer& den);

// "3", "-7/12"; the inverse of to_string below.
Rational parse_rational(const std::string& text);

std::string to_string(const Integer& value);
std::string to_string(const Rational& value);

/// H_m = 1 + 1/2 + ... + 1/m, with H_0 = 0.  Values are memoized per process;
/// the cache is guarded and invisible to callers.
Rational harmonic(std::int64_t m);

/// C(n, k), zero outside 0 <= k <= n.
Integer binomial(std::int64_t n, std::int64_t k);

Integer factorial(std::int64_t n);

// Residue class modulo m >= 2, value kept in [0, m).
class Residue {
public:
    Residue(const Integer& value, const Integer& modulus);

    const Integer& value() const noexcept { return value_; }
    const Integer& modulus() const noexcept { return modulus_; }

    Residue operator+(const Residue& other) const;
    Residue operator*(const Residue& other) const;
    bool operator==(const Residue& other) const = default;

private:
    Integer value_;
    Integer modulus_;
};

std::ostream& operator<<(std::ostream& os, const Residue& r);

/// Inverse of a modulo m by the extended Euclidean algorithm.
/// Throws NotInvertibleError when gcd(a, m) != 1.
Residue mod_inverse(const Integer& a, const Integer& m);

}  // namespace wzcert

#endif
