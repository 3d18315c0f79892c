#include "wzcert/summation.hpp"

#include "wzcert/detail/factored.hpp"
#include "wzcert/detail/linsolve.hpp"
#include "wzcert/errors.hpp"

#include <json.hpp>

#include <algorithm>
#include <random>
#include <sstream>

namespace wzcert {

using detail::AtomMap;
using detail::FactoredRatio;
using detail::GosperForm;

namespace {

// Coefficients over Q[n] of the unknowns in a polynomial identity in k:
// the identity reads sum_u unknown_u * expr[u](n,k) = 0.
using LinearExpr = std::vector<Poly>;

void append_rows(const LinearExpr& expr, std::vector<std::vector<UPoly>>& rows)
{
    int deg = -1;
    for (const auto& p : expr)
        deg = std::max(deg, p.deg_k());
    for (int e = 0; e <= deg; ++e) {
        std::vector<UPoly> row(expr.size());
        bool any = false;
        for (std::size_t u = 0; u < expr.size(); ++u) {
            row[u] = expr[u].k_coeff(e);
            any = any || !row[u].is_zero();
        }
        if (any)
            rows.push_back(std::move(row));
    }
}

int max_deg_k(const std::vector<Poly>& ps)
{
    int d = -1;
    for (const auto& p : ps)
        d = std::max(d, p.deg_k());
    return d;
}

// k^i and (k+1)^i for i = 0..d
std::pair<std::vector<Poly>, std::vector<Poly>> k_powers(int d)
{
    const Poly k = Poly::var(Var::k);
    const Poly k1 = k + Poly(1);
    std::vector<Poly> p{Poly(1)}, p1{Poly(1)};
    for (int i = 1; i <= d; ++i) {
        p.push_back(p.back() * k);
        p1.push_back(p1.back() * k1);
    }
    return {p, p1};
}

Poly k_poly(const std::vector<UPoly>& v, std::size_t from, std::size_t count)
{
    return Poly::from_k_coeffs(std::vector<UPoly>(v.begin() + static_cast<long>(from),
                                                  v.begin() + static_cast<long>(from + count)));
}

void add_linear_factor(FactoredRatio& ratio, const Poly& lin, int power)
{
    auto [s, atom] = integer_normalize(lin);
    if (power > 0) {
        ratio.num[atom] += power;
        for (int i = 0; i < power; ++i)
            ratio.scale *= s;
    } else {
        ratio.den[atom] -= power;
        for (int i = 0; i < -power; ++i)
            ratio.scale /= s;
    }
}

// t(n+j,k) = h(n,k) * q[j](n,k) with h a pure factorial product; ratio is
// h(k+1)/h(k) in factored form.
struct Setup {
    FactoredRatio ratio;
    std::vector<Poly> q;
};

Setup make_setup(const HyperTerm& t, int order)
{
    Setup s;
    for (int j = 0; j <= order; ++j)
        s.q.push_back(t.prefactor().shifted(Var::n, j));
    for (const auto& f : t.factors()) {
        const LinearForm& L = f.arg;
        const int e = f.exp;
        const std::int64_t top = L.a * order;
        const std::int64_t base = e > 0 ? std::min<std::int64_t>(0, top)
                                        : std::max<std::int64_t>(0, top);
        const unsigned mult = static_cast<unsigned>(std::abs(e));
        for (int j = 0; j <= order; ++j) {
            const std::int64_t aj = L.a * j;
            Poly rising(1);
            if (e > 0)
                for (std::int64_t m = base + 1; m <= aj; ++m)
                    rising = rising * Poly::linear(L.a, L.b, L.c + m);
            else
                for (std::int64_t m = aj + 1; m <= base; ++m)
                    rising = rising * Poly::linear(L.a, L.b, L.c + m);
            s.q[static_cast<std::size_t>(j)] = s.q[static_cast<std::size_t>(j)] * rising.pow(mult);
        }
        // (M + b)!/M! with M = L + base
        const std::int64_t c0 = L.c + base;
        if (L.b > 0)
            for (std::int64_t i = 1; i <= L.b; ++i)
                add_linear_factor(s.ratio, Poly::linear(L.a, L.b, c0 + i), e);
        else
            for (std::int64_t i = 0; i < -L.b; ++i)
                add_linear_factor(s.ratio, Poly::linear(L.a, L.b, c0 - i), -e);
    }
    return s;
}

// sigma with the common factor removed, integer content cleared and a
// positive leading coefficient; also returns the factor applied.
std::pair<std::vector<UPoly>, RatFunc> normalize_sigma(std::vector<UPoly> sigma)
{
    while (!sigma.empty() && sigma.back().is_zero())
        sigma.pop_back();
    UPoly g;
    for (const auto& s : sigma)
        g = gcd(g, s);
    Integer num_gcd = 0, den_lcm = 1;
    for (auto& s : sigma) {
        if (s.is_zero())
            continue;
        s = exact_div(s, g);
        for (const auto& c : s.coeffs()) {
            if (c == 0)
                continue;
            mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num_mpz_t());
            mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
        }
    }
    Rational scale = make_rational(den_lcm, num_gcd);
    if (sigma.back().lc() < 0)
        scale = -scale;
    for (auto& s : sigma)
        s *= scale;
    return {sigma, RatFunc(Poly(scale), Poly::from_n(g))};
}

Recurrence make_recurrence(const std::vector<UPoly>& sigma)
{
    Recurrence rec;
    rec.order = static_cast<int>(sigma.size()) - 1;
    for (const auto& s : sigma)
        rec.coeffs.push_back(Poly::from_n(s));
    return rec;
}

const std::vector<UPoly>* pick_solution(const std::vector<std::vector<UPoly>>& basis,
                                        std::size_t sigma_from)
{
    for (const auto& v : basis)
        for (std::size_t i = sigma_from; i < v.size(); ++i)
            if (!v[i].is_zero())
                return &v;
    return nullptr;
}

// A solution over Q(n) with nonzero sigma part specializes to one at every n0
// outside the zeros of that part, so failing at two points rules it out.
bool sigma_solution_possible(const std::vector<std::vector<UPoly>>& rows, std::size_t cols,
                             std::size_t sigma_from)
{
    for (long n0 : {7919L, 7927L}) {
        std::vector<std::vector<Rational>> m;
        m.reserve(rows.size());
        for (const auto& row : rows) {
            std::vector<Rational> r;
            r.reserve(cols);
            for (const auto& x : row)
                r.push_back(x.eval(Rational(n0)));
            m.push_back(std::move(r));
        }
        for (const auto& v : detail::nullspace_q(std::move(m), cols))
            for (std::size_t i = sigma_from; i < cols; ++i)
                if (v[i] != 0)
                    return true;
    }
    return false;
}

// num / (scale * prod den_atoms), cancelling atoms that divide num.  With
// irreducible atoms this leaves a coprime pair without a bivariate gcd.
RatFunc cancel_atoms(Poly num, const AtomMap& den_atoms, const Rational& scale)
{
    Poly den(scale);
    for (const auto& [atom, mult] : den_atoms) {
        int left = mult;
        while (left > 0 && !num.is_zero()) {
            try {
                num = exact_div(num, atom);
                --left;
            } catch (const DomainError&) {
                break;
            }
        }
        for (int i = 0; i < left; ++i)
            den = den * atom;
    }
    return RatFunc(num, den);
}

// R = bm * x / (c * extra * q0)
RatFunc certificate_part(const Poly& numerator, const AtomMap& c_atoms, const AtomMap& extra,
                         const Poly& q0)
{
    detail::Factored fq = detail::factor_atoms(q0);
    AtomMap atoms = c_atoms;
    detail::add_atoms(atoms, extra);
    detail::add_atoms(atoms, fq.atoms);
    return cancel_atoms(numerator, atoms, fq.scale);
}

std::optional<Telescoped> solve_pure(const Setup& s, int order, int bump)
{
    const GosperForm gp = detail::gosper_form(s.ratio);
    const Poly bm = gp.b.shifted(Var::k, -1);
    std::vector<Poly> p;
    for (const auto& q : s.q)
        p.push_back(gp.c * q);
    const int d = std::max(0, detail::gosper_degree_bound(gp.a, gp.b, max_deg_k(p))) + bump;
    auto [kp, kp1] = k_powers(d);

    const std::size_t nx = static_cast<std::size_t>(d) + 1;
    const std::size_t cols = nx + static_cast<std::size_t>(order) + 1;
    LinearExpr expr(cols);
    for (std::size_t i = 0; i < nx; ++i)
        expr[i] = gp.a * kp1[i] - bm * kp[i];
    for (int j = 0; j <= order; ++j)
        expr[nx + static_cast<std::size_t>(j)] = -p[static_cast<std::size_t>(j)];

    std::vector<std::vector<UPoly>> rows;
    append_rows(expr, rows);
    if (!sigma_solution_possible(rows, cols, nx))
        return std::nullopt;
    auto basis = detail::nullspace_qn(rows, cols);
    const auto* v = pick_solution(basis, nx);
    if (v == nullptr)
        return std::nullopt;

    Poly x = k_poly(*v, 0, nx);
    auto [sigma, factor] = normalize_sigma(std::vector<UPoly>(v->begin() + static_cast<long>(nx), v->end()));
    Certificate cert;
    cert.kind = Certificate::Kind::pure;
    cert.r1 = certificate_part(bm * x, gp.c_atoms, {}, s.q[0]) * factor;
    return Telescoped{make_recurrence(sigma), cert};
}

// Polynomial sum of den_clear * piece / extra over pieces; each piece's
// denominator times extra must divide den_clear.
Poly cleared_sum(const std::vector<RatFunc>& pieces, const Poly& den_clear, const Poly& extra)
{
    Poly out;
    for (const auto& piece : pieces)
        out += exact_div(den_clear * piece.num(), piece.den() * extra);
    return out;
}

void max_atoms(AtomMap& into, const AtomMap& from)
{
    for (const auto& [atom, mult] : from) {
        int& m = into[atom];
        m = std::max(m, mult);
    }
}

std::optional<Telescoped> solve_potential(const Setup& s, const Potential& c, int order, int bump)
{
    const GosperForm gp1 = detail::gosper_form(s.ratio);
    const Poly bm1 = gp1.b.shifted(Var::k, -1);
    std::vector<Poly> p1;
    for (const auto& q : s.q)
        p1.push_back(gp1.c * q);
    const int d1 = std::max(0, detail::gosper_degree_bound(gp1.a, gp1.b, max_deg_k(p1))) + bump;

    // D_j = c(n+j,k) - c(n,k) as pieces; F = c(n,k+1) - c(n,k)
    const auto g_pieces = delta_pieces(c, Var::n);
    std::vector<std::vector<RatFunc>> d_pieces(static_cast<std::size_t>(order) + 1);
    for (int j = 1; j <= order; ++j) {
        d_pieces[static_cast<std::size_t>(j)] = d_pieces[static_cast<std::size_t>(j) - 1];
        for (const auto& g : g_pieces)
            d_pieces[static_cast<std::size_t>(j)].push_back(g.shifted(Var::n, j - 1));
    }
    const auto f_pieces = delta_pieces(c, Var::k);

    AtomMap den_atoms;
    for (const auto& pieces : d_pieces)
        for (const auto& piece : pieces)
            max_atoms(den_atoms, detail::factor_atoms(piece.den()).atoms);
    for (const auto& piece : f_pieces) {
        AtomMap a = detail::factor_atoms(piece.den()).atoms;
        detail::add_atoms(a, gp1.c_atoms);
        max_atoms(den_atoms, a);
    }
    const Poly den = detail::product(den_atoms);

    FactoredRatio ratio2 = s.ratio;
    detail::add_atoms(ratio2.num, den_atoms);
    for (const auto& [atom, mult] : den_atoms)
        ratio2.den[atom.shifted(Var::k, 1)] += mult;
    const GosperForm gp2 = detail::gosper_form(ratio2);
    const Poly bm2 = gp2.b.shifted(Var::k, -1);

    auto [kp, kp1] = k_powers(d1);
    const Poly f_cleared = cleared_sum(f_pieces, den, gp1.c);
    std::vector<Poly> w_sigma, w_x1;
    for (int j = 0; j <= order; ++j)
        w_sigma.push_back(gp2.c * s.q[static_cast<std::size_t>(j)]
                          * cleared_sum(d_pieces[static_cast<std::size_t>(j)], den, Poly(1)));
    for (int i = 0; i <= d1; ++i)
        w_x1.push_back(gp2.c * gp1.a * kp1[static_cast<std::size_t>(i)] * f_cleared);
    const int deg_p2 = std::max(max_deg_k(w_sigma), max_deg_k(w_x1));
    const int d2 = std::max(0, detail::gosper_degree_bound(gp2.a, gp2.b, deg_p2)) + bump;
    auto [kq, kq1] = k_powers(d2);

    const std::size_t nx2 = static_cast<std::size_t>(d2) + 1;
    const std::size_t nx1 = static_cast<std::size_t>(d1) + 1;
    const std::size_t ns = static_cast<std::size_t>(order) + 1;
    const std::size_t cols = nx2 + nx1 + ns;

    std::vector<std::vector<UPoly>> rows;
    {
        LinearExpr e1(cols);
        for (std::size_t i = 0; i < nx1; ++i)
            e1[nx2 + i] = gp1.a * kp1[i] - bm1 * kp[i];
        for (std::size_t j = 0; j < ns; ++j)
            e1[nx2 + nx1 + j] = -p1[j];
        append_rows(e1, rows);
    }
    {
        LinearExpr e2(cols);
        for (std::size_t i = 0; i < nx2; ++i)
            e2[i] = gp2.a * kq1[i] - bm2 * kq[i];
        for (std::size_t i = 0; i < nx1; ++i)
            e2[nx2 + i] = w_x1[i];
        for (std::size_t j = 0; j < ns; ++j)
            e2[nx2 + nx1 + j] = -w_sigma[j];
        append_rows(e2, rows);
    }
    if (!sigma_solution_possible(rows, cols, nx2 + nx1))
        return std::nullopt;
    auto basis = detail::nullspace_qn(rows, cols);
    const auto* v = pick_solution(basis, nx2 + nx1);
    if (v == nullptr)
        return std::nullopt;

    Poly x2 = k_poly(*v, 0, nx2);
    Poly x1 = k_poly(*v, nx2, nx1);
    auto [sigma, factor] =
        normalize_sigma(std::vector<UPoly>(v->begin() + static_cast<long>(nx2 + nx1), v->end()));
    Certificate cert;
    cert.kind = Certificate::Kind::potential;
    cert.r1 = certificate_part(bm1 * x1, gp1.c_atoms, {}, s.q[0]) * factor;
    cert.r2 = certificate_part(bm2 * x2, gp2.c_atoms, den_atoms, s.q[0]) * factor;
    return Telescoped{make_recurrence(sigma), cert};
}

template <class Solve>
Telescoped search(const HyperTerm& t, int max_order, Solve solve)
{
    if (max_order < 1)
        throw PreconditionError("max_order must be at least 1");
    std::vector<int> tried;
    for (int r = 1; r <= max_order; ++r) {
        tried.push_back(r);
        const Setup s = make_setup(t, r);
        for (int bump = 0; bump <= 4; bump += 2)
            if (auto found = solve(s, r, bump))
                return *found;
    }
    throw NotFoundError("no recurrence of order <= " + std::to_string(max_order) + " for "
                            + to_string(t),
                        tried);
}

}  // namespace

// ---------------------------------------------------------------- Gosper

std::optional<RatFunc> gosper(const RatFunc& r)
{
    const GosperForm gp = detail::gosper_form(detail::factored_ratio(r));
    const Poly bm = gp.b.shifted(Var::k, -1);
    const int d = detail::gosper_degree_bound(gp.a, gp.b, gp.c.deg_k());
    if (d < 0)
        return std::nullopt;
    auto [kp, kp1] = k_powers(d);
    const std::size_t nx = static_cast<std::size_t>(d) + 1;
    LinearExpr expr(nx + 1);
    for (std::size_t i = 0; i < nx; ++i)
        expr[i] = gp.a * kp1[i] - bm * kp[i];
    expr[nx] = -gp.c;
    std::vector<std::vector<UPoly>> rows;
    append_rows(expr, rows);
    auto basis = detail::nullspace_qn(rows, nx + 1);
    const auto* v = pick_solution(basis, nx);
    if (v == nullptr)
        return std::nullopt;
    Poly x = k_poly(*v, 0, nx);
    return RatFunc(bm * x, (*v)[nx] * gp.c);
}

// ---------------------------------------------------------------- telescoping

Telescoped zeilberger(const HyperTerm& t, int max_order)
{
    return search(t, max_order,
                  [](const Setup& s, int r, int bump) { return solve_pure(s, r, bump); });
}

Telescoped zeil_potential(const HyperTerm& t, const Potential& c, int max_order)
{
    return search(t, max_order, [&c](const Setup& s, int r, int bump) {
        return solve_potential(s, c, r, bump);
    });
}

// ---------------------------------------------------------------- verification

VerificationReport verify_certificate_report(const HyperTerm& t, const std::optional<Potential>& c,
                                             const Recurrence& rec, const Certificate& cert)
{
    const bool potential = cert.kind == Certificate::Kind::potential;
    if (potential != c.has_value() || potential != cert.r2.has_value())
        throw PreconditionError("certificate kind does not match the summand");
    if (rec.order < 0 || rec.coeffs.size() != static_cast<std::size_t>(rec.order) + 1)
        throw PreconditionError("malformed recurrence");

    VerificationReport report;

    // Divided by t(n,k): rho_j = t(n+j,k)/t(n,k), rho_k = t(n,k+1)/t(n,k).
    const RatFunc sq_n = shift_quotient(t, Var::n);
    const RatFunc rho_k = shift_quotient(t, Var::k);
    std::vector<RatFunc> rho{RatFunc(1)};
    for (int j = 1; j <= rec.order; ++j)
        rho.push_back(rho.back() * sq_n.shifted(Var::n, j - 1));

    RatFunc coef_c;
    for (int j = 0; j <= rec.order; ++j)
        coef_c += RatFunc(rec.coeffs[static_cast<std::size_t>(j)]) * rho[static_cast<std::size_t>(j)];
    const RatFunc r1_next = cert.r1.shifted(Var::k, 1);
    coef_c -= rho_k * r1_next - cert.r1;
    report.symbolic = coef_c.is_zero();

    if (potential && report.symbolic) {
        const RatFunc f = delta(*c, Var::k);
        const RatFunc g = delta(*c, Var::n);
        RatFunc dj;
        RatFunc coef_1;
        for (int j = 1; j <= rec.order; ++j) {
            dj += g.shifted(Var::n, j - 1);
            coef_1 += RatFunc(rec.coeffs[static_cast<std::size_t>(j)]) * rho[static_cast<std::size_t>(j)] * dj;
        }
        coef_1 -= rho_k * (r1_next * f + cert.r2->shifted(Var::k, 1)) - *cert.r2;
        report.symbolic = coef_1.is_zero();
    }

    // exact spot checks of sum_j sigma_j T(n+j,k) = G(n,k+1) - G(n,k)
    auto summand = [&](std::int64_t n0, std::int64_t k0) -> Rational {
        Rational v = eval_term(t, n0, k0);
        if (potential && v != 0)
            v *= eval_potential(*c, n0, k0);
        return v;
    };
    auto big_g = [&](std::int64_t n0, std::int64_t k0) -> Rational {
        Rational tv = eval_term(t, n0, k0);
        Rational nq(static_cast<long>(n0)), kq(static_cast<long>(k0));
        Rational inner = cert.r1.eval(nq, kq);
        if (potential)
            inner = inner * eval_potential(*c, n0, k0) + cert.r2->eval(nq, kq);
        return tv * inner;
    };
    std::mt19937_64 rng(20240611);
    std::uniform_int_distribution<std::int64_t> pick_n(1, 30);
    report.numeric = true;
    for (int attempt = 0; attempt < 5000 && report.numeric_checks < 50; ++attempt) {
        const std::int64_t n0 = pick_n(rng);
        const std::int64_t k0 = std::uniform_int_distribution<std::int64_t>(0, n0)(rng);
        try {
            Rational lhs = 0;
            for (int j = 0; j <= rec.order; ++j)
                lhs += rec.coeffs[static_cast<std::size_t>(j)].eval(Rational(static_cast<long>(n0)), Rational(0))
                       * summand(n0 + j, k0);
            Rational rhs = big_g(n0, k0 + 1) - big_g(n0, k0);
            ++report.numeric_checks;
            if (lhs != rhs)
                report.numeric = false;
        } catch (const PoleError&) {
        } catch (const DomainError&) {
        }
    }
    if (report.numeric_checks == 0)
        report.numeric = false;
    return report;
}

bool verify_certificate(const HyperTerm& t, const std::optional<Potential>& c,
                        const Recurrence& rec, const Certificate& cert)
{
    return verify_certificate_report(t, c, rec, cert).ok();
}

// ---------------------------------------------------------------- guessing

std::optional<Recurrence> guess_recurrence(const std::vector<Rational>& values, int order,
                                           int degree)
{
    if (order < 1 || degree < 0)
        throw PreconditionError("order must be positive and degree nonnegative");
    const std::size_t unknowns = static_cast<std::size_t>(order + 1) * static_cast<std::size_t>(degree + 1);
    if (values.size() <= unknowns + static_cast<std::size_t>(order) + 5)
        throw PreconditionError("guess_recurrence needs more than "
                                + std::to_string(unknowns + static_cast<std::size_t>(order) + 5)
                                + " values");
    std::vector<std::vector<Rational>> rows;
    for (std::size_t n = 0; n + static_cast<std::size_t>(order) < values.size(); ++n) {
        std::vector<Rational> row;
        row.reserve(unknowns);
        for (int j = 0; j <= order; ++j) {
            Rational power = 1;
            for (int i = 0; i <= degree; ++i) {
                row.push_back(power * values[n + static_cast<std::size_t>(j)]);
                power *= static_cast<long>(n);
            }
        }
        rows.push_back(std::move(row));
    }
    auto basis = detail::nullspace_q(std::move(rows), unknowns);
    for (const auto& v : basis) {
        std::vector<UPoly> sigma;
        for (int j = 0; j <= order; ++j) {
            auto from = v.begin() + static_cast<long>(j) * (degree + 1);
            sigma.emplace_back(std::vector<Rational>(from, from + degree + 1));
        }
        while (!sigma.empty() && sigma.back().is_zero())
            sigma.pop_back();
        if (sigma.size() < 2)
            continue;
        Recurrence rec = make_recurrence(normalize_sigma(sigma).first);
        auto residuals = apply_recurrence(rec, values, 0);
        if (std::all_of(residuals.begin(), residuals.end(), [](const Rational& x) { return x == 0; }))
            return rec;
    }
    return std::nullopt;
}

std::vector<Rational> apply_recurrence(const Recurrence& rec, const std::vector<Rational>& values,
                                       std::int64_t offset)
{
    if (offset < 0)
        throw PreconditionError("negative offset");
    const auto len = static_cast<std::int64_t>(values.size());
    if (offset + rec.order >= len)
        throw PreconditionError("sequence of length " + std::to_string(len)
                                + " is too short for a recurrence of order "
                                + std::to_string(rec.order) + " at offset "
                                + std::to_string(offset));
    std::vector<Rational> out;
    for (std::int64_t n = offset; n + rec.order < len; ++n) {
        Rational s = 0;
        const Rational nq(static_cast<long>(n));
        for (int j = 0; j <= rec.order; ++j)
            s += rec.coeffs[static_cast<std::size_t>(j)].eval(nq, Rational(0))
                 * values[static_cast<std::size_t>(n + j)];
        out.push_back(s);
    }
    return out;
}

// ---------------------------------------------------------------- text

std::string to_json(const Recurrence& rec, const Certificate& cert, bool verified)
{
    nlohmann::json j;
    j["order"] = rec.order;
    j["coeffs"] = nlohmann::json::array();
    for (const auto& c : rec.coeffs)
        j["coeffs"].push_back(to_string(c));
    nlohmann::json cj;
    cj["kind"] = cert.kind == Certificate::Kind::pure ? "pure" : "potential";
    cj["r1"] = to_string(cert.r1);
    cj["r2"] = cert.r2 ? nlohmann::json(to_string(*cert.r2)) : nlohmann::json(nullptr);
    j["certificate"] = cj;
    j["verified"] = verified;
    return j.dump(2);
}

Telescoped telescoped_from_json(const std::string& text, bool* verified)
{
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(e.what(), e.byte);
    }
    Telescoped out;
    out.recurrence.order = j.at("order").get<int>();
    for (const auto& c : j.at("coeffs"))
        out.recurrence.coeffs.push_back(parse_poly(c.get<std::string>()));
    const auto& cj = j.at("certificate");
    const auto kind = cj.at("kind").get<std::string>();
    out.certificate.kind = kind == "pure" ? Certificate::Kind::pure : Certificate::Kind::potential;
    out.certificate.r1 = parse_ratfunc(cj.at("r1").get<std::string>());
    if (!cj.at("r2").is_null())
        out.certificate.r2 = parse_ratfunc(cj.at("r2").get<std::string>());
    if (verified != nullptr)
        *verified = j.at("verified").get<bool>();
    return out;
}

std::string to_string(const Recurrence& rec)
{
    std::ostringstream os;
    for (int j = rec.order; j >= 0; --j) {
        if (j != rec.order)
            os << " + ";
        os << '(' << rec.coeffs[static_cast<std::size_t>(j)] << ")*u(n";
        if (j > 0)
            os << '+' << j;
        os << ')';
    }
    os << " = 0";
    return os.str();
}

}  // namespace wzcert
