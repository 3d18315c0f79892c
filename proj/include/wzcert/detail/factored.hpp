#ifndef WZCERT_DETAIL_FACTORED_HPP
#define WZCERT_DETAIL_FACTORED_HPP

#include "wzcert/numeric.hpp"
#include "wzcert/poly.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

namespace wzcert::detail {

// Atoms are integer-primitive polynomials with positive lex leading
// coefficient.  A multiset of atoms with multiplicities.
using AtomMap = std::map<Poly, int>;

// scale * prod atom^mult
struct Factored {
    Rational scale{1};
    AtomMap atoms;
};

/// Splits p into linear factors in k (a k + b n + c), linear factors in n,
/// and at most one remaining atom of higher degree.  Throws DomainError on 0.
Factored factor_atoms(const Poly& p);

// Positive divisors of |x|, or nullopt when x resists trial factoring.
std::optional<std::vector<Integer>> divisors(Integer x);

// Distinct rational roots.  Returns what it can verify when the coefficients
// are too large to factor completely.
std::vector<Rational> rational_roots(const UPoly& p);

Poly product(const AtomMap& atoms);
void add_atoms(AtomMap& into, const AtomMap& from, int times = 1);

// scale * prod(num) / prod(den)
struct FactoredRatio {
    Rational scale{1};
    AtomMap num;
    AtomMap den;
};

FactoredRatio factored_ratio(const RatFunc& r);

/// Gosper-Petkovsek form: ratio = (a(k)/b(k)) * c(k+1)/c(k) with
/// gcd(a(k), b(k+h)) = 1 for every h >= 0 (on the atom level).
struct GosperForm {
    Poly a;
    Poly b;
    Poly c;
    AtomMap c_atoms;
};

GosperForm gosper_form(FactoredRatio r);

// h >= 0 with g(k + h) == f, if any.
std::optional<std::int64_t> dispersion(const Poly& f, const Poly& g);

// Upper bound for deg_k x in a(k) x(k+1) - b(k-1) x(k) = p(k); may be negative.
int gosper_degree_bound(const Poly& a, const Poly& b, int deg_p);

}  // namespace wzcert::detail

#endif
