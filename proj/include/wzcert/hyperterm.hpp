#ifndef WZCERT_HYPERTERM_HPP
#define WZCERT_HYPERTERM_HPP

#include "wzcert/numeric.hpp"
#include "wzcert/poly.hpp"

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace wzcert {

// a*n + b*k + c with integer coefficients.
struct LinearForm {
    std::int64_t a = 0;
    std::int64_t b = 0;
    std::int64_t c = 0;

    std::int64_t coeff(Var v) const noexcept { return v == Var::n ? a : b; }
    LinearForm shifted(Var v, std::int64_t offset) const noexcept
    {
        return {a, b, c + coeff(v) * offset};
    }
    Integer eval(std::int64_t n0, std::int64_t k0) const;
    Poly to_poly() const { return Poly::linear(a, b, c); }

    friend auto operator<=>(const LinearForm&, const LinearForm&) = default;
};

std::string to_string(const LinearForm& f);

// (arg)!^exp
struct FactorialPower {
    LinearForm arg;
    int exp = 0;

    friend bool operator==(const FactorialPower&, const FactorialPower&) = default;
};

/// A proper hypergeometric term: prefactor(n,k) * prod (a_i n + b_i k + c_i)!^e_i.
/// Factors are merged by argument and sorted (positive exponents first, then
/// by argument); constant arguments are folded into the prefactor.
class HyperTerm {
public:
    HyperTerm(std::vector<FactorialPower> factors, Poly prefactor);

    const std::vector<FactorialPower>& factors() const noexcept { return factors_; }
    const Poly& prefactor() const noexcept { return prefactor_; }

    HyperTerm shifted(Var v, std::int64_t offset) const;

    friend bool operator==(const HyperTerm&, const HyperTerm&) = default;

private:
    std::vector<FactorialPower> factors_;
    Poly prefactor_;
};

/// Parses text such as "k*(n+k)!^2/(k!^4*(n-k)!^2)".  Both ^ and ** are
/// accepted for powers.  Throws ParseError (with byte offset) on syntax errors,
/// non-linear factorial arguments, unknown variables, or a non-polynomial
/// prefactor.
HyperTerm parse_term(const std::string& text);

std::string to_string(const HyperTerm& t);

// t(n,k+1)/t(n,k) or t(n+1,k)/t(n,k), normalized.
RatFunc shift_quotient(const HyperTerm& t, Var v);

/// Exact value at an integer point.  A factor with negative exponent and a
/// negative integer argument makes the value 0; a factor with positive exponent
/// and a negative argument throws DomainError.
Rational eval_term(const HyperTerm& t, std::int64_t n0, std::int64_t k0);

}  // namespace wzcert

#endif
