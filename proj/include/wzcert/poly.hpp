#ifndef WZCERT_POLY_HPP
#define WZCERT_POLY_HPP

#include "wzcert/numeric.hpp"

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace wzcert {

enum class Var { n, k };

char var_name(Var v);

// Dense univariate polynomial over Q.  Used for coefficients-in-n of a
// bivariate Poly, for contents, and for the rational-function linear algebra.
// The zero polynomial has no stored coefficients and degree -1.
class UPoly {
public:
    UPoly() = default;
    UPoly(const Rational& c);  // NOLINT(google-explicit-constructor)
    UPoly(int c) : UPoly(Rational(c)) {}  // NOLINT(google-explicit-constructor)
    explicit UPoly(std::vector<Rational> coeffs);

    static UPoly monomial(const Rational& c, int degree);

    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const noexcept { return c_.empty(); }
    bool is_constant() const noexcept { return c_.size() <= 1; }
    const Rational& lc() const;
    const Rational& operator[](int i) const;
    const std::vector<Rational>& coeffs() const noexcept { return c_; }

    Rational eval(const Rational& x) const;
    UPoly shifted(const Rational& offset) const;  // p(x + offset)
    UPoly monic() const;

    UPoly& operator+=(const UPoly& o);
    UPoly& operator-=(const UPoly& o);
    UPoly& operator*=(const Rational& s);

    friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
    friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
    friend UPoly operator-(const UPoly& a);
    friend UPoly operator*(const UPoly& a, const UPoly& b);
    friend UPoly operator*(UPoly a, const Rational& s) { return a *= s; }
    friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }
    friend bool operator<(const UPoly& a, const UPoly& b);

private:
    void trim();

    std::vector<Rational> c_;
};

// Quotient and remainder of a / b over Q.
std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b);
// Throws DomainError when b does not divide a.
UPoly exact_div(const UPoly& a, const UPoly& b);
// Monic gcd; gcd(0, 0) = 0.
UPoly gcd(const UPoly& a, const UPoly& b);

// Polynomial in n and k over Q.  Stored k-major: coefficient i is the
// polynomial in n multiplying k^i, which gives the "polynomial in k over Q[n]"
// view that Gosper and Zeilberger work in.  Semantically this is the
// exponent-pair table {(deg_n, deg_k) -> coefficient} with zeros omitted.
class Poly {
public:
    Poly() = default;
    Poly(const Rational& c);  // NOLINT(google-explicit-constructor)
    Poly(int c) : Poly(Rational(c)) {}  // NOLINT(google-explicit-constructor)

    static Poly var(Var v);
    static Poly monomial(const Rational& c, int deg_n, int deg_k);
    static Poly from_n(const UPoly& p);
    static Poly from_k_coeffs(std::vector<UPoly> coeffs);
    // a*n + b*k + c
    static Poly linear(std::int64_t a, std::int64_t b, std::int64_t c);

    bool is_zero() const noexcept { return ck_.empty(); }
    bool is_constant() const noexcept;
    bool free_of_k() const noexcept { return ck_.size() <= 1; }
    bool free_of_n() const noexcept;
    int deg_k() const noexcept { return static_cast<int>(ck_.size()) - 1; }
    int deg_n() const noexcept;
    int degree(Var v) const noexcept { return v == Var::k ? deg_k() : deg_n(); }

    // Coefficient of k^i as a polynomial in n (zero beyond the degree).
    const UPoly& k_coeff(int i) const;
    const std::vector<UPoly>& k_coeffs() const noexcept { return ck_; }
    Rational coeff(int deg_n, int deg_k) const;
    std::size_t term_count() const;

    // Leading term under lex order with n > k.
    std::pair<int, int> lead_exponent() const;
    const Rational& lead_coeff() const;

    Poly shifted(Var v, std::int64_t offset) const;
    Rational eval(const Rational& n0, const Rational& k0) const;
    UPoly eval_n(const Rational& n0) const;   // result is a polynomial in k
    UPoly subs_k(const UPoly& rho) const;     // k := rho(n), result in n

    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Rational& s);

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator-(const Poly& a);
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(Poly a, const Rational& s) { return a *= s; }
    friend Poly operator*(const UPoly& a, const Poly& b);
    friend Poly operator*(int s, Poly a) { return a *= Rational(s); }
    friend Poly operator*(Poly a, int s) { return a *= Rational(s); }
    friend Poly operator*(const Rational& s, Poly a) { return a *= s; }
    friend bool operator==(const Poly& a, const Poly& b) { return a.ck_ == b.ck_; }
    friend bool operator<(const Poly& a, const Poly& b);

    Poly pow(unsigned e) const;

private:
    void trim();

    std::vector<UPoly> ck_;
};

// Exact quotient; throws DomainError if b does not divide a.
Poly exact_div(const Poly& a, const Poly& b);
bool divides(const Poly& d, const Poly& a);

// gcd of the k-coefficients, monic in n.
UPoly content_k(const Poly& p);

/// Greatest common divisor, monic under lex order n > k.  Primitive-part
/// Euclid in k with the content gcd taken in n.  Throws DomainError when both
/// arguments are zero.
Poly poly_gcd(const Poly& a, const Poly& b);

// Divide by the lex leading coefficient.
Poly make_monic(const Poly& p);

// p = scale * q with q integer-primitive and positive lex leading coefficient.
std::pair<Rational, Poly> integer_normalize(const Poly& p);

std::string to_string(const Poly& p);
std::ostream& operator<<(std::ostream& os, const Poly& p);

// Rational function num/den with gcd(num, den) = 1 and den monic under lex
// order n > k.  Canonical, so structural equality is equality of functions.
class RatFunc {
public:
    RatFunc() : num_(), den_(1) {}
    RatFunc(const Poly& p);  // NOLINT(google-explicit-constructor)
    RatFunc(const Rational& c) : RatFunc(Poly(c)) {}  // NOLINT(google-explicit-constructor)
    RatFunc(int c) : RatFunc(Poly(c)) {}  // NOLINT(google-explicit-constructor)
    // Throws DomainError on a zero denominator.
    RatFunc(const Poly& num, const Poly& den);

    static RatFunc var(Var v) { return RatFunc(Poly::var(v)); }

    const Poly& num() const noexcept { return num_; }
    const Poly& den() const noexcept { return den_; }
    bool is_zero() const noexcept { return num_.is_zero(); }
    bool is_polynomial() const { return den_.is_constant(); }

    RatFunc shifted(Var v, std::int64_t offset) const;
    // Throws PoleError where the denominator vanishes.
    Rational eval(const Rational& n0, const Rational& k0) const;
    RatFunc inverse() const;
    RatFunc pow(int e) const;

    RatFunc& operator+=(const RatFunc& o);
    RatFunc& operator-=(const RatFunc& o);
    RatFunc& operator*=(const RatFunc& o);
    RatFunc& operator/=(const RatFunc& o);

    friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
    friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
    friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
    friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }
    friend RatFunc operator-(const RatFunc& a);
    friend bool operator==(const RatFunc& a, const RatFunc& b)
    {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

private:
    struct Normalized {};
    RatFunc(Poly num, Poly den, Normalized) : num_(std::move(num)), den_(std::move(den)) {}

    Poly num_;
    Poly den_;
};

// The project-wide zero test: num_f * den_g - num_g * den_f == 0.
bool equal_by_cross_multiplication(const RatFunc& f, const RatFunc& g);

std::string to_string(const RatFunc& f);
std::ostream& operator<<(std::ostream& os, const RatFunc& f);

// Infix text in n and k: + - * / ^ ** parentheses, integer literals.
Poly parse_poly(const std::string& text);
RatFunc parse_ratfunc(const std::string& text);

}  // namespace wzcert

#endif
