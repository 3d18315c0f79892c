#include "wzcert/beukers.hpp"

#include "wzcert/detail/factored.hpp"
#include "wzcert/errors.hpp"

#include <json.hpp>

#include <algorithm>
#include <thread>

namespace wzcert {

HyperTerm identity_term() { return parse_term("k*(n+k)!^2/(k!^4*(n-k)!^2)"); }

std::vector<EtaFactor> apery_eta_factors() { return {{2, 4}, {4, 4}}; }

Rational theorem_sum(std::int64_t n)
{
    if (n < 1)
        throw PreconditionError("theorem_sum needs n >= 1");
    static const HyperTerm t = identity_term();
    static const Potential c = paper_potential();
    Rational sum = 0;
    for (std::int64_t k = 1; k <= n; ++k)
        sum += eval_term(t, n, k) * eval_potential(c, n, k);
    return sum;
}

std::int64_t nonvanishing_from(const Poly& p)
{
    if (p.is_zero() || !p.free_of_k())
        throw DomainError("nonvanishing_from needs a nonzero polynomial in n");
    const UPoly& u = p.k_coeff(0);
    std::int64_t from = 1;
    if (u.degree() <= 0)
        return from;
    Integer den_lcm = 1;
    for (const auto& c : u.coeffs())
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
    std::size_t low = 0;
    while (u[static_cast<int>(low)] == 0)
        ++low;
    if (auto divs = detail::divisors(Integer(u[static_cast<int>(low)] * den_lcm))) {
        for (const auto& d : *divs)
            if (u.eval(Rational(d)) == 0 && d.fits_slong_p())
                from = std::max<std::int64_t>(from, d.get_si() + 1);
        return from;
    }
    // Cauchy bound on the size of every root
    Rational bound = 0;
    for (int i = 0; i < u.degree(); ++i)
        bound = std::max(bound, Rational(abs(u[i] / u.lc())));
    Integer b = Integer(bound.get_num() / bound.get_den()) + 2;
    if (!b.fits_slong_p())
        throw DomainError("leading coefficient roots out of range");
    return std::max<std::int64_t>(from, b.get_si());
}

ProofReport complete_proof(const Telescoped& found)
{
    static const HyperTerm t = identity_term();
    static const Potential c = paper_potential();
    ProofReport report;
    report.recurrence = found.recurrence;
    report.certificate = found.certificate;
    report.certificate_verified = verify_certificate(t, c, found.recurrence, found.certificate);
    report.leading_coeff_nonzero_from = nonvanishing_from(found.recurrence.coeffs.back());
    std::int64_t last = report.leading_coeff_nonzero_from + found.recurrence.order - 1;
    bool zero = true;
    for (std::int64_t n = 1; n <= last; ++n) {
        Rational s = theorem_sum(n);
        zero = zero && s == 0;
        report.base_cases_checked.emplace_back(n, s);
    }
    report.conclusion = report.certificate_verified && zero;
    return report;
}

ProofReport prove_identity_zero(int max_order)
{
    if (max_order < 1)
        throw PreconditionError("max_order must be at least 1");
    return complete_proof(zeil_potential(identity_term(), paper_potential(), max_order));
}

std::string to_json(const ProofReport& report)
{
    nlohmann::json j;
    j["recurrence"] = nlohmann::json::parse(
        to_json(report.recurrence, report.certificate, report.certificate_verified));
    j["certificate_verified"] = report.certificate_verified;
    j["leading_nonzero_from"] = report.leading_coeff_nonzero_from;
    nlohmann::json base = nlohmann::json::array();
    for (const auto& [n, s] : report.base_cases_checked)
        base.push_back(nlohmann::json::array({n, to_string(s)}));
    j["base_cases"] = base;
    j["conclusion"] = report.conclusion;
    return j.dump(2);
}

bool check_beukers(const Integer& p, const Series& series)
{
    if (p < 3 || !p.fits_slong_p() || mpz_probab_prime_p(p.get_mpz_t(), 30) == 0)
        throw PreconditionError("check_beukers needs an odd prime");
    std::int64_t pi = p.get_si();
    if (series.truncation() < pi)
        throw PreconditionError("series truncated below p");
    Integer m = p * p;
    return apery_mod((pi - 1) / 2, pi) == Residue(series[pi], m);
}

std::vector<std::pair<std::int64_t, bool>> scan_beukers(std::int64_t p_max, unsigned threads)
{
    if (p_max < 3)
        throw PreconditionError("scan_beukers needs p_max >= 3");
    std::vector<bool> composite(static_cast<std::size_t>(p_max) + 1, false);
    std::vector<std::int64_t> primes;
    for (std::int64_t i = 2; i <= p_max; ++i) {
        if (composite[static_cast<std::size_t>(i)])
            continue;
        if (i > 2)
            primes.push_back(i);
        for (std::int64_t j = i * i; j <= p_max; j += i)
            composite[static_cast<std::size_t>(j)] = true;
    }
    Series series = eta_expand(apery_eta_factors(), 1, p_max);
    std::vector<std::pair<std::int64_t, bool>> out(primes.size());
    auto work = [&](std::size_t first, std::size_t step) {
        for (std::size_t i = first; i < primes.size(); i += step)
            out[i] = {primes[i], check_beukers(Integer(primes[i]), series)};
    };
    threads = std::max(1u, threads);
    if (threads == 1) {
        work(0, 1);
        return out;
    }
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < threads; ++w)
        pool.emplace_back(work, w, threads);
    for (auto& th : pool)
        th.join();
    return out;
}

}  // namespace wzcert
