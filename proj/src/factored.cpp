#include "wzcert/detail/factored.hpp"

#include "wzcert/errors.hpp"

#include <algorithm>

namespace wzcert::detail {

namespace {

constexpr unsigned long kTrialLimit = 1000000;
constexpr std::size_t kMaxDivisors = 20000;

Poly normalized_atom(const Poly& p) { return integer_normalize(p).second; }

// Linear factor k - u n - v of q, found by matching roots at two specialized n.
std::optional<Poly> find_linear_factor(const Poly& q)
{
    const UPoly& lcq = q.k_coeff(q.deg_k());
    std::vector<long> ns;
    for (long x = 0; ns.size() < 2 && x < 64; ++x)
        if (lcq.eval(Rational(x)) != 0)
            ns.push_back(x);
    if (ns.size() < 2)
        return std::nullopt;
    auto r1 = rational_roots(q.eval_n(Rational(ns[0])));
    if (r1.empty())
        return std::nullopt;
    auto r2 = rational_roots(q.eval_n(Rational(ns[1])));
    Rational dn = ns[1] - ns[0];
    for (const auto& a : r1)
        for (const auto& b : r2) {
            Rational u = (b - a) / dn;
            Rational v = a - u * ns[0];
            if (q.subs_k(UPoly({v, u})).is_zero())
                return normalized_atom(Poly::var(Var::k) - Poly::from_n(UPoly({v, u})));
        }
    return std::nullopt;
}

void split_univariate(UPoly p, AtomMap& atoms)
{
    for (const auto& r : rational_roots(p)) {
        UPoly lin({-r, Rational(1)});
        Poly atom = normalized_atom(Poly::from_n(lin));
        while (true) {
            auto [q, rem] = divmod(p, lin);
            if (!rem.is_zero())
                break;
            p = q;
            ++atoms[atom];
        }
    }
    if (p.degree() > 0)
        ++atoms[normalized_atom(Poly::from_n(p))];
}

}  // namespace

std::optional<std::vector<Integer>> divisors(Integer x)
{
    x = abs(x);
    std::vector<std::pair<Integer, int>> primes;
    for (unsigned long d = 2; d <= kTrialLimit && Integer(d) * d <= x; ++d) {
        if (mpz_divisible_ui_p(x.get_mpz_t(), d) == 0)
            continue;
        int e = 0;
        while (mpz_divisible_ui_p(x.get_mpz_t(), d) != 0) {
            mpz_divexact_ui(x.get_mpz_t(), x.get_mpz_t(), d);
            ++e;
        }
        primes.emplace_back(Integer(d), e);
    }
    if (x > 1) {
        if (x > Integer(kTrialLimit) * kTrialLimit
            && mpz_probab_prime_p(x.get_mpz_t(), 25) == 0)
            return std::nullopt;
        primes.emplace_back(x, 1);
    }
    std::vector<Integer> out{1};
    for (const auto& [p, e] : primes) {
        std::size_t base = out.size();
        Integer pk = 1;
        for (int i = 1; i <= e; ++i) {
            pk *= p;
            for (std::size_t j = 0; j < base; ++j)
                out.push_back(out[j] * pk);
        }
        if (out.size() > kMaxDivisors)
            return std::nullopt;
    }
    return out;
}

std::vector<Rational> rational_roots(const UPoly& p)
{
    std::vector<Rational> roots;
    if (p.degree() <= 0)
        return roots;
    Integer den_lcm = 1;
    for (const auto& c : p.coeffs())
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
    std::vector<Integer> z;
    for (const auto& c : p.coeffs())
        z.push_back(Integer(c * den_lcm));
    std::size_t low = 0;
    while (z[low] == 0)
        ++low;
    if (low > 0)
        roots.emplace_back(0);
    if (low + 1 == z.size())
        return roots;
    auto num_divs = divisors(z[low]);
    auto den_divs = divisors(z.back());
    if (!num_divs || !den_divs)
        return roots;
    UPoly reduced(std::vector<Rational>(p.coeffs().begin() + static_cast<long>(low),
                                        p.coeffs().end()));
    std::vector<Rational> found;
    for (const auto& a : *num_divs)
        for (const auto& b : *den_divs)
            for (int sign : {1, -1}) {
                Rational cand = make_rational(sign * a, b);
                if (reduced.eval(cand) == 0)
                    found.push_back(cand);
            }
    std::sort(found.begin(), found.end());
    found.erase(std::unique(found.begin(), found.end()), found.end());
    roots.insert(roots.end(), found.begin(), found.end());
    return roots;
}

Factored factor_atoms(const Poly& p)
{
    if (p.is_zero())
        throw DomainError("factoring the zero polynomial");
    Factored out;
    Poly q = integer_normalize(p).second;
    if (!q.is_constant()) {
        UPoly cont = content_k(q);
        if (cont.degree() > 0) {
            q = exact_div(q, Poly::from_n(cont));
            split_univariate(cont, out.atoms);
        }
        if (q.free_of_k()) {
            // q is a rational constant after removing its content
        } else {
            while (q.deg_k() >= 2) {
                auto lin = find_linear_factor(q);
                if (!lin)
                    break;
                q = exact_div(q, *lin);
                ++out.atoms[*lin];
            }
            ++out.atoms[normalized_atom(q)];
        }
    }
    out.scale = p.lead_coeff() / product(out.atoms).lead_coeff();
    return out;
}

Poly product(const AtomMap& atoms)
{
    Poly r(1);
    for (const auto& [atom, mult] : atoms)
        for (int i = 0; i < mult; ++i)
            r = r * atom;
    return r;
}

void add_atoms(AtomMap& into, const AtomMap& from, int times)
{
    for (const auto& [atom, mult] : from) {
        int& m = into[atom];
        m += mult * times;
        if (m == 0)
            into.erase(atom);
    }
}

FactoredRatio factored_ratio(const RatFunc& r)
{
    if (r.is_zero())
        throw DomainError("zero ratio");
    Factored num = factor_atoms(r.num());
    Factored den = factor_atoms(r.den());
    return {num.scale / den.scale, std::move(num.atoms), std::move(den.atoms)};
}

std::optional<std::int64_t> dispersion(const Poly& f, const Poly& g)
{
    const int m = f.deg_k();
    if (m < 1 || g.deg_k() != m || f.k_coeff(m) != g.k_coeff(m))
        return std::nullopt;
    const UPoly& lc = f.k_coeff(m);
    UPoly diff = f.k_coeff(m - 1) - g.k_coeff(m - 1);  // m * h * lc
    Rational h = 0;
    if (!diff.is_zero()) {
        if (diff.degree() != lc.degree())
            return std::nullopt;
        Rational mu = diff.lc() / lc.lc();
        if (lc * mu != diff)
            return std::nullopt;
        h = mu / m;
        if (h.get_den() != 1 || h < 0 || !h.get_num().fits_slong_p())
            return std::nullopt;
    }
    std::int64_t hi = h.get_num().get_si();
    if (g.shifted(Var::k, hi) != f)
        return std::nullopt;
    return hi;
}

GosperForm gosper_form(FactoredRatio r)
{
    // cancel identical atoms
    for (auto it = r.num.begin(); it != r.num.end();) {
        auto jt = r.den.find(it->first);
        if (jt == r.den.end()) {
            ++it;
            continue;
        }
        int common = std::min(it->second, jt->second);
        jt->second -= common;
        if (jt->second == 0)
            r.den.erase(jt);
        it->second -= common;
        it = it->second == 0 ? r.num.erase(it) : std::next(it);
    }

    AtomMap c_atoms;
    while (true) {
        std::optional<std::int64_t> best;
        const Poly* bf = nullptr;
        const Poly* bg = nullptr;
        for (const auto& [f, mf] : r.num) {
            if (f.free_of_k())
                continue;
            for (const auto& [g, mg] : r.den) {
                auto h = dispersion(f, g);
                if (h && (!best || *h < *best)) {
                    best = h;
                    bf = &f;
                    bg = &g;
                }
            }
        }
        if (!best)
            break;
        Poly f = *bf, g = *bg;
        if (--r.num[f] == 0)
            r.num.erase(f);
        if (--r.den[g] == 0)
            r.den.erase(g);
        for (std::int64_t i = 1; i <= *best; ++i)
            ++c_atoms[f.shifted(Var::k, -i)];
    }
    return {product(r.num) * r.scale, product(r.den), product(c_atoms), std::move(c_atoms)};
}

int gosper_degree_bound(const Poly& a, const Poly& b, int deg_p)
{
    Poly bm = b.shifted(Var::k, -1);
    const int da = a.deg_k(), db = bm.deg_k();
    if (da != db || a.k_coeff(da) != bm.k_coeff(db))
        return deg_p - std::max(da, db);
    const int m = da;
    int d = deg_p - m + 1;
    if (m >= 1) {
        const UPoly& lam = a.k_coeff(m);
        UPoly diff = bm.k_coeff(m - 1) - a.k_coeff(m - 1);
        std::optional<Rational> mu;
        if (diff.is_zero())
            mu = Rational(0);
        else if (diff.degree() == lam.degree() && lam * Rational(diff.lc() / lam.lc()) == diff)
            mu = diff.lc() / lam.lc();
        if (mu && mu->get_den() == 1 && *mu >= 0 && mu->get_num().fits_sint_p())
            d = std::max(d, static_cast<int>(mu->get_num().get_si()));
    }
    return d;
}

}  // namespace wzcert::detail
