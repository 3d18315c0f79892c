#include "wzcert/poly.hpp"

#include "wzcert/detail/expr_parser.hpp"
#include "wzcert/detail/factored.hpp"
#include "wzcert/errors.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>
#include <ostream>
#include <sstream>

namespace wzcert {

char var_name(Var v) { return v == Var::n ? 'n' : 'k'; }

namespace {

// Function-local so they are usable during other translation units' static
// initialization.
const Rational& zero_rational()
{
    static const Rational z(0);
    return z;
}

const UPoly& zero_upoly()
{
    static const UPoly z;
    return z;
}

}  // namespace

namespace {

// Arithmetic modulo the Mersenne prime 2^61 - 1, used to certify coprimality
// cheaply: if the reductions of two polynomials (with leading coefficients
// that survive the reduction) are coprime, so are the polynomials over Q.
constexpr std::uint64_t kPrime = (std::uint64_t{1} << 61) - 1;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b)
{
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % kPrime);
}

std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e)
{
    std::uint64_t r = 1;
    for (; e != 0; e >>= 1, a = mul_mod(a, a))
        if ((e & 1) != 0)
            r = mul_mod(r, a);
    return r;
}

std::optional<std::uint64_t> reduce_mod(const Rational& x)
{
    static const Integer m(kPrime);
    Integer num = x.get_num() % m, den = x.get_den() % m;
    if (den == 0)
        return std::nullopt;
    if (num < 0)
        num += m;
    std::uint64_t n = 0, d = 0;
    mpz_export(&n, nullptr, -1, sizeof n, 0, 0, num.get_mpz_t());
    mpz_export(&d, nullptr, -1, sizeof d, 0, 0, den.get_mpz_t());
    return mul_mod(n, pow_mod(d, kPrime - 2));
}

// Returns nullopt when the reduction is undefined or drops the degree.
std::optional<std::vector<std::uint64_t>> reduce_mod(const UPoly& p)
{
    std::vector<std::uint64_t> r;
    for (const auto& c : p.coeffs()) {
        auto x = reduce_mod(c);
        if (!x)
            return std::nullopt;
        r.push_back(*x);
    }
    if (r.empty() || r.back() == 0)
        return std::nullopt;
    return r;
}

// Degree of the gcd modulo the prime.
int gcd_degree_mod(std::vector<std::uint64_t> a, std::vector<std::uint64_t> b)
{
    auto trim = [](std::vector<std::uint64_t>& v) {
        while (!v.empty() && v.back() == 0)
            v.pop_back();
    };
    trim(a);
    trim(b);
    if (a.size() < b.size())
        std::swap(a, b);
    while (!b.empty()) {
        const std::uint64_t inv = pow_mod(b.back(), kPrime - 2);
        while (a.size() >= b.size()) {
            const std::uint64_t f = mul_mod(a.back(), inv);
            const std::size_t shift = a.size() - b.size();
            for (std::size_t j = 0; j < b.size(); ++j)
                a[shift + j] = (a[shift + j] + kPrime - mul_mod(f, b[j])) % kPrime;
            trim(a);
            if (a.empty())
                break;
        }
        std::swap(a, b);
    }
    return static_cast<int>(a.size()) - 1;
}

bool certainly_coprime(const UPoly& a, const UPoly& b)
{
    auto ra = reduce_mod(a), rb = reduce_mod(b);
    return ra && rb && gcd_degree_mod(*ra, *rb) == 0;
}

}  // namespace

// ---------------------------------------------------------------- UPoly

UPoly::UPoly(const Rational& c)
{
    if (c != 0)
        c_.push_back(c);
}

UPoly::UPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

UPoly UPoly::monomial(const Rational& c, int degree)
{
    UPoly p;
    if (c != 0) {
        p.c_.assign(static_cast<std::size_t>(degree) + 1, Rational(0));
        p.c_.back() = c;
    }
    return p;
}

void UPoly::trim()
{
    while (!c_.empty() && c_.back() == 0)
        c_.pop_back();
}

const Rational& UPoly::lc() const
{
    if (c_.empty())
        throw DomainError("leading coefficient of zero polynomial");
    return c_.back();
}

const Rational& UPoly::operator[](int i) const
{
    if (i < 0 || i >= static_cast<int>(c_.size()))
        return zero_rational();
    return c_[static_cast<std::size_t>(i)];
}

Rational UPoly::eval(const Rational& x) const
{
    Rational r = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
        r = r * x + *it;
    return r;
}

UPoly UPoly::shifted(const Rational& offset) const
{
    if (offset == 0 || c_.size() <= 1)
        return *this;
    // Taylor shift by repeated synthetic division.
    std::vector<Rational> a = c_;
    const std::size_t d = a.size();
    for (std::size_t i = 0; i + 1 < d; ++i)
        for (std::size_t j = d - 1; j > i; --j)
            a[j - 1] += offset * a[j];
    return UPoly(std::move(a));
}

UPoly UPoly::monic() const
{
    if (c_.empty() || c_.back() == 1)
        return *this;
    UPoly r = *this;
    Rational inv = 1 / c_.back();
    for (auto& x : r.c_)
        x *= inv;
    return r;
}

UPoly& UPoly::operator+=(const UPoly& o)
{
    if (o.c_.size() > c_.size())
        c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i)
        c_[i] += o.c_[i];
    trim();
    return *this;
}

UPoly& UPoly::operator-=(const UPoly& o)
{
    if (o.c_.size() > c_.size())
        c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i)
        c_[i] -= o.c_[i];
    trim();
    return *this;
}

UPoly& UPoly::operator*=(const Rational& s)
{
    if (s == 0) {
        c_.clear();
        return *this;
    }
    for (auto& x : c_)
        x *= s;
    return *this;
}

UPoly operator-(const UPoly& a)
{
    UPoly r = a;
    for (auto& x : r.c_)
        x = -x;
    return r;
}

UPoly operator*(const UPoly& a, const UPoly& b)
{
    if (a.is_zero() || b.is_zero())
        return {};
    std::vector<Rational> r(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0)
            continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j)
            r[i + j] += a.c_[i] * b.c_[j];
    }
    return UPoly(std::move(r));
}

bool operator<(const UPoly& a, const UPoly& b)
{
    if (a.c_.size() != b.c_.size())
        return a.c_.size() < b.c_.size();
    for (std::size_t i = a.c_.size(); i-- > 0;) {
        int c = cmp(a.c_[i], b.c_[i]);
        if (c != 0)
            return c < 0;
    }
    return false;
}

std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b)
{
    if (b.is_zero())
        throw DomainError("polynomial division by zero");
    if (a.degree() < b.degree())
        return {UPoly(), a};
    std::vector<Rational> r = a.coeffs();
    std::vector<Rational> q(static_cast<std::size_t>(a.degree() - b.degree()) + 1);
    const auto& bc = b.coeffs();
    const Rational inv = 1 / b.lc();
    const std::size_t db = bc.size() - 1;
    for (std::size_t i = r.size(); i-- > db;) {
        if (r[i] == 0)
            continue;
        Rational f = r[i] * inv;
        q[i - db] = f;
        for (std::size_t j = 0; j <= db; ++j)
            r[i - db + j] -= f * bc[j];
    }
    r.resize(db);
    return {UPoly(std::move(q)), UPoly(std::move(r))};
}

UPoly exact_div(const UPoly& a, const UPoly& b)
{
    auto [q, r] = divmod(a, b);
    if (!r.is_zero())
        throw DomainError("inexact univariate division");
    return q;
}

UPoly gcd(const UPoly& a, const UPoly& b)
{
    if (a.degree() > 0 && b.degree() > 0 && certainly_coprime(a, b))
        return UPoly(1);
    UPoly x = a.monic(), y = b.monic();
    if (x.degree() < y.degree())
        std::swap(x, y);
    while (!y.is_zero()) {
        if (y.degree() == 0)
            return UPoly(1);
        UPoly r = divmod(x, y).second.monic();
        x = std::move(y);
        y = std::move(r);
    }
    return x;
}

// ---------------------------------------------------------------- Poly

Poly::Poly(const Rational& c)
{
    if (c != 0)
        ck_.emplace_back(c);
}

Poly Poly::var(Var v)
{
    return v == Var::n ? monomial(1, 1, 0) : monomial(1, 0, 1);
}

Poly Poly::monomial(const Rational& c, int deg_n, int deg_k)
{
    Poly p;
    if (c == 0)
        return p;
    p.ck_.resize(static_cast<std::size_t>(deg_k) + 1);
    p.ck_.back() = UPoly::monomial(c, deg_n);
    return p;
}

Poly Poly::from_n(const UPoly& p)
{
    Poly r;
    if (!p.is_zero())
        r.ck_.push_back(p);
    return r;
}

Poly Poly::from_k_coeffs(std::vector<UPoly> coeffs)
{
    Poly r;
    r.ck_ = std::move(coeffs);
    r.trim();
    return r;
}

Poly Poly::linear(std::int64_t a, std::int64_t b, std::int64_t c)
{
    Poly r;
    r.ck_.emplace_back(std::vector<Rational>{Rational(static_cast<long>(c)),
                                             Rational(static_cast<long>(a))});
    r.ck_.emplace_back(Rational(static_cast<long>(b)));
    r.trim();
    return r;
}

void Poly::trim()
{
    while (!ck_.empty() && ck_.back().is_zero())
        ck_.pop_back();
}

bool Poly::is_constant() const noexcept
{
    return ck_.empty() || (ck_.size() == 1 && ck_[0].is_constant());
}

bool Poly::free_of_n() const noexcept
{
    return std::all_of(ck_.begin(), ck_.end(), [](const UPoly& c) { return c.is_constant(); });
}

int Poly::deg_n() const noexcept
{
    int d = -1;
    for (const auto& c : ck_)
        d = std::max(d, c.degree());
    return d;
}

const UPoly& Poly::k_coeff(int i) const
{
    if (i < 0 || i >= static_cast<int>(ck_.size()))
        return zero_upoly();
    return ck_[static_cast<std::size_t>(i)];
}

Rational Poly::coeff(int deg_n, int deg_k) const { return k_coeff(deg_k)[deg_n]; }

std::size_t Poly::term_count() const
{
    std::size_t n = 0;
    for (const auto& c : ck_)
        for (const auto& x : c.coeffs())
            n += (x != 0);
    return n;
}

std::pair<int, int> Poly::lead_exponent() const
{
    if (ck_.empty())
        throw DomainError("leading term of zero polynomial");
    int best_n = -1, best_k = -1;
    for (int i = 0; i < static_cast<int>(ck_.size()); ++i) {
        int d = ck_[static_cast<std::size_t>(i)].degree();
        if (d > best_n || (d == best_n && d >= 0)) {
            best_n = d;
            best_k = i;
        }
    }
    return {best_n, best_k};
}

const Rational& Poly::lead_coeff() const
{
    auto [dn, dk] = lead_exponent();
    return ck_[static_cast<std::size_t>(dk)][dn];
}

Poly Poly::shifted(Var v, std::int64_t offset) const
{
    if (offset == 0 || is_zero())
        return *this;
    const Rational o(static_cast<long>(offset));
    Poly r;
    if (v == Var::n) {
        r.ck_.reserve(ck_.size());
        for (const auto& c : ck_)
            r.ck_.push_back(c.shifted(o));
        return r;
    }
    // Taylor shift in k with coefficients in Q[n].
    std::vector<UPoly> a = ck_;
    const std::size_t d = a.size();
    for (std::size_t i = 0; i + 1 < d; ++i)
        for (std::size_t j = d - 1; j > i; --j)
            a[j - 1] += a[j] * o;
    return from_k_coeffs(std::move(a));
}

Rational Poly::eval(const Rational& n0, const Rational& k0) const
{
    Rational r = 0;
    for (auto it = ck_.rbegin(); it != ck_.rend(); ++it)
        r = r * k0 + it->eval(n0);
    return r;
}

UPoly Poly::eval_n(const Rational& n0) const
{
    std::vector<Rational> c;
    c.reserve(ck_.size());
    for (const auto& p : ck_)
        c.push_back(p.eval(n0));
    return UPoly(std::move(c));
}

UPoly Poly::subs_k(const UPoly& rho) const
{
    UPoly r;
    for (auto it = ck_.rbegin(); it != ck_.rend(); ++it)
        r = r * rho + *it;
    return r;
}

Poly& Poly::operator+=(const Poly& o)
{
    if (o.ck_.size() > ck_.size())
        ck_.resize(o.ck_.size());
    for (std::size_t i = 0; i < o.ck_.size(); ++i)
        ck_[i] += o.ck_[i];
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& o)
{
    if (o.ck_.size() > ck_.size())
        ck_.resize(o.ck_.size());
    for (std::size_t i = 0; i < o.ck_.size(); ++i)
        ck_[i] -= o.ck_[i];
    trim();
    return *this;
}

Poly& Poly::operator*=(const Rational& s)
{
    if (s == 0) {
        ck_.clear();
        return *this;
    }
    for (auto& c : ck_)
        c *= s;
    return *this;
}

Poly operator-(const Poly& a)
{
    Poly r = a;
    for (auto& c : r.ck_)
        c = -c;
    return r;
}

Poly operator*(const Poly& a, const Poly& b)
{
    if (a.is_zero() || b.is_zero())
        return {};
    std::vector<UPoly> r(a.ck_.size() + b.ck_.size() - 1);
    for (std::size_t i = 0; i < a.ck_.size(); ++i) {
        if (a.ck_[i].is_zero())
            continue;
        for (std::size_t j = 0; j < b.ck_.size(); ++j)
            if (!b.ck_[j].is_zero())
                r[i + j] += a.ck_[i] * b.ck_[j];
    }
    return Poly::from_k_coeffs(std::move(r));
}

Poly operator*(const UPoly& a, const Poly& b)
{
    Poly r;
    if (a.is_zero())
        return r;
    r.ck_.reserve(b.ck_.size());
    for (const auto& c : b.ck_)
        r.ck_.push_back(a * c);
    return r;
}

bool operator<(const Poly& a, const Poly& b)
{
    if (a.ck_.size() != b.ck_.size())
        return a.ck_.size() < b.ck_.size();
    for (std::size_t i = a.ck_.size(); i-- > 0;) {
        if (a.ck_[i] < b.ck_[i])
            return true;
        if (b.ck_[i] < a.ck_[i])
            return false;
    }
    return false;
}

Poly Poly::pow(unsigned e) const
{
    Poly result(1), base = *this;
    while (e) {
        if (e & 1u)
            result = result * base;
        e >>= 1u;
        if (e)
            base = base * base;
    }
    return result;
}

Poly exact_div(const Poly& a, const Poly& b)
{
    if (b.is_zero())
        throw DomainError("polynomial division by zero");
    if (b.free_of_k()) {
        const UPoly& d = b.k_coeff(0);
        std::vector<UPoly> q;
        q.reserve(a.k_coeffs().size());
        for (const auto& c : a.k_coeffs())
            q.push_back(exact_div(c, d));
        return Poly::from_k_coeffs(std::move(q));
    }
    const int db = b.deg_k();
    const UPoly& lb = b.k_coeff(db);
    std::vector<UPoly> r = a.k_coeffs();
    if (static_cast<int>(r.size()) - 1 < db) {
        if (a.is_zero())
            return {};
        throw DomainError("inexact polynomial division");
    }
    std::vector<UPoly> q(r.size() - static_cast<std::size_t>(db));
    for (int i = static_cast<int>(r.size()) - 1; i >= db; --i) {
        if (r[static_cast<std::size_t>(i)].is_zero())
            continue;
        UPoly f = exact_div(r[static_cast<std::size_t>(i)], lb);
        for (int j = 0; j <= db; ++j)
            r[static_cast<std::size_t>(i - db + j)] -= f * b.k_coeff(j);
        q[static_cast<std::size_t>(i - db)] = std::move(f);
    }
    for (int i = 0; i < db; ++i)
        if (!r[static_cast<std::size_t>(i)].is_zero())
            throw DomainError("inexact polynomial division");
    return Poly::from_k_coeffs(std::move(q));
}

bool divides(const Poly& d, const Poly& a)
{
    try {
        exact_div(a, d);
        return true;
    } catch (const DomainError&) {
        return false;
    }
}

UPoly content_k(const Poly& p)
{
    UPoly g;
    for (const auto& c : p.k_coeffs()) {
        if (c.is_zero())
            continue;
        g = gcd(g, c);
        if (g.degree() == 0)
            return UPoly(1);
    }
    return g;
}

Poly make_monic(const Poly& p)
{
    if (p.is_zero())
        return p;
    const Rational& lc = p.lead_coeff();
    if (lc == 1)
        return p;
    return p * Rational(1 / lc);
}

std::pair<Rational, Poly> integer_normalize(const Poly& p)
{
    if (p.is_zero())
        return {Rational(0), p};
    Integer num_gcd = 0, den_lcm = 1;
    for (const auto& c : p.k_coeffs())
        for (const auto& x : c.coeffs()) {
            if (x == 0)
                continue;
            mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), x.get_num_mpz_t());
            mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), x.get_den_mpz_t());
        }
    Rational scale = make_rational(num_gcd, den_lcm);
    if (p.lead_coeff() < 0)
        scale = -scale;
    return {scale, p * Rational(1 / scale)};
}

namespace {

// Pseudo-remainder of a by b in k, then primitive part over Q[n].
Poly prem_primitive(const Poly& a, const Poly& b)
{
    const int db = b.deg_k();
    const UPoly& lb = b.k_coeff(db);
    std::vector<UPoly> r = a.k_coeffs();
    int dr = static_cast<int>(r.size()) - 1;
    while (dr >= db) {
        UPoly lr = r[static_cast<std::size_t>(dr)];
        if (!lr.is_zero()) {
            for (auto& c : r)
                c = c * lb;
            for (int j = 0; j <= db; ++j)
                r[static_cast<std::size_t>(dr - db + j)] -= lr * b.k_coeff(j);
        }
        r.pop_back();
        while (!r.empty() && r.back().is_zero())
            r.pop_back();
        dr = static_cast<int>(r.size()) - 1;
        // keep coefficient growth in check
        UPoly g;
        for (const auto& c : r)
            if (!c.is_zero())
                g = gcd(g, c);
        if (!g.is_zero() && g.degree() > 0)
            for (auto& c : r)
                c = exact_div(c, g);
        if (!r.empty()) {
            auto [s, unused] = integer_normalize(Poly::from_k_coeffs(r));
            (void)unused;
            Rational inv = 1 / s;
            for (auto& c : r)
                c *= inv;
        }
    }
    return Poly::from_k_coeffs(std::move(r));
}

Poly primitive_k(const Poly& p)
{
    UPoly c = content_k(p);
    if (c.degree() <= 0)
        return p;
    return exact_div(p, Poly::from_n(c));
}

}  // namespace

Poly poly_gcd(const Poly& a, const Poly& b)
{
    if (a.is_zero() && b.is_zero())
        throw DomainError("gcd of two zero polynomials");
    if (a.is_zero())
        return make_monic(b);
    if (b.is_zero())
        return make_monic(a);
    if (a.is_constant() || b.is_constant())
        return Poly(1);
    const UPoly ca = content_k(a), cb = content_k(b);
    const UPoly cg = gcd(ca, cb);
    if (a.free_of_k() || b.free_of_k())
        return Poly::from_n(cg);
    Poly x = primitive_k(a), y = primitive_k(b);
    // A specialization n = n0 that keeps both k-degrees and has coprime
    // images proves the primitive parts coprime.
    for (long n0 : {7L, 11L, 13L}) {
        UPoly xs = x.eval_n(Rational(n0)), ys = y.eval_n(Rational(n0));
        if (xs.degree() == x.deg_k() && ys.degree() == y.deg_k()) {
            if (certainly_coprime(xs, ys))
                return make_monic(Poly::from_n(cg));
            break;
        }
    }
    // When one side splits into factors of degree one in k (irreducible, as
    // the parts are primitive), the gcd follows by trial division.
    const bool y_smaller = y.term_count() <= x.term_count();
    for (const Poly* side : {y_smaller ? &y : &x, y_smaller ? &x : &y}) {
        const Poly& other = side == &y ? x : y;
        auto split = detail::factor_atoms(*side);
        bool linear = std::all_of(split.atoms.begin(), split.atoms.end(),
                                  [](const auto& am) { return am.first.deg_k() == 1; });
        if (!linear)
            continue;
        Poly g(1), rest = other;
        for (const auto& [atom, mult] : split.atoms)
            for (int i = 0; i < mult; ++i) {
                if (!divides(atom, rest))
                    break;
                rest = exact_div(rest, atom);
                g = g * atom;
            }
        return make_monic(Poly::from_n(cg) * g);
    }
    if (x.deg_k() < y.deg_k())
        std::swap(x, y);
    while (y.deg_k() > 0) {
        Poly r = prem_primitive(x, y);
        x = std::move(y);
        if (r.is_zero()) {
            y = Poly();
            break;
        }
        y = primitive_k(r);
    }
    Poly g = y.is_zero() ? x : Poly(1);
    return make_monic(Poly::from_n(cg) * g);
}

namespace {

void append_monomial(std::ostream& os, int dn, int dk)
{
    bool any = false;
    if (dn > 0) {
        os << 'n';
        if (dn > 1)
            os << '^' << dn;
        any = true;
    }
    if (dk > 0) {
        if (any)
            os << '*';
        os << 'k';
        if (dk > 1)
            os << '^' << dk;
    }
}

}  // namespace

std::string to_string(const Poly& p)
{
    if (p.is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    // lex order n > k, descending
    for (int dn = p.deg_n(); dn >= 0; --dn) {
        for (int dk = p.deg_k(); dk >= 0; --dk) {
            Rational c = p.coeff(dn, dk);
            if (c == 0)
                continue;
            const bool negative = c < 0;
            if (negative)
                c = -c;
            if (first)
                os << (negative ? "-" : "");
            else
                os << (negative ? "-" : "+");
            first = false;
            const bool unit = dn == 0 && dk == 0;
            if (c != 1 || unit) {
                os << c.get_str();
                if (!unit)
                    os << '*';
            }
            append_monomial(os, dn, dk);
        }
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << to_string(p); }

// ---------------------------------------------------------------- RatFunc

RatFunc::RatFunc(const Poly& p) : num_(p), den_(1) {}

RatFunc::RatFunc(const Poly& num, const Poly& den)
{
    if (den.is_zero())
        throw DomainError("rational function with zero denominator");
    if (num.is_zero()) {
        num_ = Poly();
        den_ = Poly(1);
        return;
    }
    Poly g = poly_gcd(num, den);
    Poly n = g.is_constant() ? num : exact_div(num, g);
    Poly d = g.is_constant() ? den : exact_div(den, g);
    Rational s = d.lead_coeff();
    if (s != 1) {
        Rational inv = 1 / s;
        n *= inv;
        d *= inv;
    }
    num_ = std::move(n);
    den_ = std::move(d);
}

RatFunc RatFunc::shifted(Var v, std::int64_t offset) const
{
    // Shifts preserve coprimality and the lex leading coefficient.
    return RatFunc(num_.shifted(v, offset), den_.shifted(v, offset), Normalized{});
}

Rational RatFunc::eval(const Rational& n0, const Rational& k0) const
{
    Rational d = den_.eval(n0, k0);
    if (d == 0)
        throw PoleError("pole of " + to_string(*this) + " at (n,k) = (" + n0.get_str() + ","
                        + k0.get_str() + ")");
    return num_.eval(n0, k0) / d;
}

RatFunc RatFunc::inverse() const
{
    if (num_.is_zero())
        throw DomainError("inverse of zero rational function");
    Rational s = num_.lead_coeff();
    Rational inv = 1 / s;
    return RatFunc(den_ * inv, num_ * inv, Normalized{});
}

RatFunc RatFunc::pow(int e) const
{
    if (e < 0)
        return inverse().pow(-e);
    return RatFunc(num_.pow(static_cast<unsigned>(e)), den_.pow(static_cast<unsigned>(e)),
                   Normalized{});
}

RatFunc& RatFunc::operator+=(const RatFunc& o)
{
    if (o.is_zero())
        return *this;
    if (is_zero())
        return *this = o;
    if (den_ == o.den_) {
        *this = RatFunc(num_ + o.num_, den_);
        return *this;
    }
    Poly g = poly_gcd(den_, o.den_);
    if (g.is_constant()) {
        *this = RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
        return *this;
    }
    Poly d1 = exact_div(den_, g), d2 = exact_div(o.den_, g);
    *this = RatFunc(num_ * d2 + o.num_ * d1, d1 * o.den_);
    return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& o) { return *this += -o; }

RatFunc& RatFunc::operator*=(const RatFunc& o)
{
    if (is_zero() || o.is_zero()) {
        *this = RatFunc();
        return *this;
    }
    Poly g1 = poly_gcd(num_, o.den_), g2 = poly_gcd(o.num_, den_);
    Poly n1 = g1.is_constant() ? num_ : exact_div(num_, g1);
    Poly d2 = g1.is_constant() ? o.den_ : exact_div(o.den_, g1);
    Poly n2 = g2.is_constant() ? o.num_ : exact_div(o.num_, g2);
    Poly d1 = g2.is_constant() ? den_ : exact_div(den_, g2);
    Poly n = n1 * n2, d = d1 * d2;
    Rational s = d.lead_coeff();
    if (s != 1) {
        Rational inv = 1 / s;
        n *= inv;
        d *= inv;
    }
    *this = RatFunc(std::move(n), std::move(d), Normalized{});
    return *this;
}

RatFunc& RatFunc::operator/=(const RatFunc& o) { return *this *= o.inverse(); }

RatFunc operator-(const RatFunc& a) { return RatFunc(-a.num_, a.den_, RatFunc::Normalized{}); }

bool equal_by_cross_multiplication(const RatFunc& f, const RatFunc& g)
{
    return (f.num() * g.den() - g.num() * f.den()).is_zero();
}

std::string to_string(const RatFunc& f)
{
    if (f.is_zero())
        return "0";
    // integer-primitive numerator and denominator with the scalar pulled out
    auto [sn, pn] = integer_normalize(f.num());
    auto [sd, pd] = integer_normalize(f.den());
    const Rational scale = sn / sd;
    const Integer& p = scale.get_num();
    const Integer& q = scale.get_den();
    const bool has_den = !(pd == Poly(1) && q == 1);

    std::string num;
    if (pn == Poly(1)) {
        num = p.get_str();
    } else {
        std::string body = to_string(pn);
        if (pn.term_count() > 1 && (has_den || p != 1))
            body = "(" + body + ")";
        if (p == 1)
            num = body;
        else if (p == -1)
            num = "-" + body;
        else
            num = p.get_str() + "*" + body;
    }
    if (!has_den)
        return num;
    std::string den;
    if (pd == Poly(1)) {
        den = q.get_str();
    } else {
        den = to_string(pd);
        if (pd.term_count() > 1)
            den = "(" + den + ")";
        if (q != 1)
            den = q.get_str() + "*" + den;
    }
    if (den.find_first_of("*+-") != std::string::npos && den.front() != '(')
        den = "(" + den + ")";
    else if (den.front() == '(' && den.find(")*") != std::string::npos)
        den = "(" + den + ")";
    return num + "/" + den;
}

std::ostream& operator<<(std::ostream& os, const RatFunc& f) { return os << to_string(f); }

// ---------------------------------------------------------------- parsing

namespace {

struct RatFuncPolicy {
    using Value = RatFunc;

    Value number(const Integer& v, std::size_t) { return RatFunc(Rational(v)); }
    Value name(const std::string& id, std::size_t at)
    {
        if (id == "n")
            return RatFunc::var(Var::n);
        if (id == "k")
            return RatFunc::var(Var::k);
        throw ParseError("unknown variable '" + id + "' (only n and k are allowed)", at);
    }
    Value call(const std::string& id, Value, std::size_t at)
    {
        throw ParseError("unexpected function '" + id + "'", at);
    }
    Value factorial(Value, std::size_t at)
    {
        throw ParseError("factorial not allowed in a rational function", at);
    }
    Value add(Value a, Value b, std::size_t) { return a + b; }
    Value sub(Value a, Value b, std::size_t) { return a - b; }
    Value mul(Value a, Value b, std::size_t) { return a * b; }
    Value div(Value a, Value b, std::size_t at)
    {
        if (b.is_zero())
            throw ParseError("division by zero", at);
        return a / b;
    }
    Value neg(Value a, std::size_t) { return -a; }
    Value pow(Value a, long e, std::size_t at)
    {
        if (e < 0 && a.is_zero())
            throw ParseError("division by zero", at);
        return a.pow(static_cast<int>(e));
    }
};

}  // namespace

RatFunc parse_ratfunc(const std::string& text)
{
    RatFuncPolicy policy;
    return detail::ExprParser<RatFuncPolicy>(text, policy).parse();
}

Poly parse_poly(const std::string& text)
{
    RatFunc f = parse_ratfunc(text);
    if (!f.is_polynomial())
        throw ParseError("expected a polynomial, got " + to_string(f), 0);
    return f.num() * Rational(1 / f.den().lead_coeff());
}

}  // namespace wzcert
