#ifndef WZCERT_BEUKERS_HPP
#define WZCERT_BEUKERS_HPP

#include "wzcert/numeric.hpp"
#include "wzcert/qseries.hpp"
#include "wzcert/summation.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace wzcert {

// k (n+k)!^2 / (k!^4 (n-k)!^2), i.e. k C(n,k)^2 C(n+k,k)^2
HyperTerm identity_term();

// (2,4), (4,4): the product of (1 - q^{2j})^4 (1 - q^{4j})^4
std::vector<EtaFactor> apery_eta_factors();

/// sum_{k=1}^{n} t(n,k) c(n,k) with t = identity_term(), c = paper_potential().
/// Requires n >= 1.
Rational theorem_sum(std::int64_t n);

struct ProofReport {
    Recurrence recurrence;
    Certificate certificate;
    bool certificate_verified = false;
    // sigma_r(n) != 0 for every n >= this value (and it is at least 1)
    std::int64_t leading_coeff_nonzero_from = 1;
    std::vector<std::pair<std::int64_t, Rational>> base_cases_checked;
    bool conclusion = false;
};

/// Finds the recurrence with zeil_potential and completes the proof.
/// Throws PreconditionError for max_order < 1; NotFoundError propagates.
ProofReport prove_identity_zero(int max_order = 3);

/// The proof steps for a given recurrence and certificate: verification,
/// the bound n0 from the integer roots of the leading coefficient, and the
/// base cases n = 1 .. n0 + order - 1.
ProofReport complete_proof(const Telescoped& found);

/// Least n0 >= 1 with p(n) != 0 for all integers n >= n0.  p must be a
/// nonzero polynomial in n only.
std::int64_t nonvanishing_from(const Poly& p);

std::string to_json(const ProofReport& report);

/// A((p-1)/2) == a(p) mod p^2, with a(p) read from the series.
/// Requires p an odd prime and series.truncation() >= p.
bool check_beukers(const Integer& p, const Series& series);

/// check_beukers for every odd prime p <= p_max, in increasing order.
/// Work is spread over `threads` workers; the result does not depend on it.
std::vector<std::pair<std::int64_t, bool>> scan_beukers(std::int64_t p_max, unsigned threads = 1);

}  // namespace wzcert

#endif
