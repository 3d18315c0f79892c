#ifndef WZCERT_SUMMATION_HPP
#define WZCERT_SUMMATION_HPP

#include "wzcert/hyperterm.hpp"
#include "wzcert/numeric.hpp"
#include "wzcert/poly.hpp"
#include "wzcert/potential.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace wzcert {

/// sum_j coeffs[j](n) * u(n + j) = 0.  Coefficients are polynomials in n with
/// integer coefficients, no common factor, and a positive leading coefficient
/// on the last one.
struct Recurrence {
    int order = 0;
    std::vector<Poly> coeffs;

    friend bool operator==(const Recurrence&, const Recurrence&) = default;
};

/// Encodes G(n,k) = t * r1 (pure) or G = t * (r1 * c + r2) (potential).
struct Certificate {
    enum class Kind { pure, potential };

    Kind kind = Kind::pure;
    RatFunc r1;
    std::optional<RatFunc> r2;

    friend bool operator==(const Certificate&, const Certificate&) = default;
};

struct Telescoped {
    Recurrence recurrence;
    Certificate certificate;
};

/// Given r = t(k+1)/t(k), returns R with S = R*t satisfying S(k+1) - S(k) = t,
/// or nullopt when t has no hypergeometric antidifference.
std::optional<RatFunc> gosper(const RatFunc& r);

/// Creative telescoping: the lowest order r <= max_order with
/// sum_j sigma_j(n) t(n+j,k) = G(n,k+1) - G(n,k), G = R1 * t.
/// Throws PreconditionError for max_order < 1 and NotFoundError when the
/// search is exhausted.
Telescoped zeilberger(const HyperTerm& t, int max_order);

/// Creative telescoping for the summand t * c with c a potential:
/// sum_j sigma_j(n) (t c)(n+j,k) = Delta_k[t (R1 c + R2)].
Telescoped zeil_potential(const HyperTerm& t, const Potential& c, int max_order);

struct VerificationReport {
    bool symbolic = false;
    int numeric_checks = 0;
    bool numeric = false;

    bool ok() const { return symbolic && numeric; }
};

/// Symbolic check of the telescoping identity plus exact evaluation at 50
/// pseudorandom points (pole and out-of-domain points are skipped).
/// Throws PreconditionError when the certificate kind does not match c.
VerificationReport verify_certificate_report(const HyperTerm& t, const std::optional<Potential>& c,
                                             const Recurrence& rec, const Certificate& cert);

bool verify_certificate(const HyperTerm& t, const std::optional<Potential>& c,
                        const Recurrence& rec, const Certificate& cert);

/// Fits a recurrence with coefficients of degree <= degree to every value.
/// Requires values.size() > (order+1)(degree+1) + order + 5.
std::optional<Recurrence> guess_recurrence(const std::vector<Rational>& values, int order,
                                           int degree);

/// Residuals sum_j sigma_j(n) values[n+j] for n = offset, offset+1, ... while
/// n + order stays inside the list.
std::vector<Rational> apply_recurrence(const Recurrence& rec, const std::vector<Rational>& values,
                                       std::int64_t offset = 0);

// {"order", "coeffs", "certificate": {"kind", "r1", "r2"}, "verified"}
std::string to_json(const Recurrence& rec, const Certificate& cert, bool verified);
// Inverse of to_json; returns the verified flag through the out-parameter.
Telescoped telescoped_from_json(const std::string& text, bool* verified = nullptr);

std::string to_string(const Recurrence& rec);

}  // namespace wzcert

#endif
