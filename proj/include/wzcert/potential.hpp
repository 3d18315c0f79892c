#ifndef WZCERT_POTENTIAL_HPP
#define WZCERT_POTENTIAL_HPP

#include "wzcert/hyperterm.hpp"
#include "wzcert/numeric.hpp"
#include "wzcert/poly.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace wzcert {

// coef * H(arg)
struct HarmonicTerm {
    Rational coef;
    LinearForm arg;

    friend bool operator==(const HarmonicTerm&, const HarmonicTerm&) = default;
};

/// c(n,k) = sum_i coef_i * H(a_i n + b_i k + c_i) + ratpart(n,k).
///
/// Harmonic arguments must have a_i, b_i in {-1, 0, 1}: a unit shift of either
/// variable then moves every argument by at most one, so each finite
/// difference of c is a rational function.  Wider steps throw DomainError.
class Potential {
public:
    Potential(std::vector<HarmonicTerm> hterms, RatFunc ratpart);

    const std::vector<HarmonicTerm>& hterms() const noexcept { return hterms_; }
    const RatFunc& ratpart() const noexcept { return ratpart_; }

    Potential shifted(Var v, std::int64_t offset) const;

    friend bool operator==(const Potential&, const Potential&) = default;

private:
    std::vector<HarmonicTerm> hterms_;
    RatFunc ratpart_;
};

// 1/(2k) + H(n+k) + H(n-k) - 2 H(k)
Potential paper_potential();

/// Exact value.  Throws DomainError for a negative harmonic index and
/// PoleError where the rational part has a pole.
Rational eval_potential(const Potential& c, std::int64_t n0, std::int64_t k0);

// c(v+1) - c as a single rational function.
RatFunc delta(const Potential& c, Var v);

// The same difference as a list of summands: one unit fraction per harmonic
// term that moves, plus the difference of the rational part.  Callers that
// need factored denominators work from these.
std::vector<RatFunc> delta_pieces(const Potential& c, Var v);

// Text like "1/(2*k) + H(n+k) + H(n-k) - 2*H(k)".
Potential parse_potential(const std::string& text);
std::string to_string(const Potential& c);

}  // namespace wzcert

#endif
