#include "wzcert/hyperterm.hpp"

#include "wzcert/detail/expr_parser.hpp"
#include "wzcert/errors.hpp"

#include <algorithm>
#include <map>

namespace wzcert {

Integer LinearForm::eval(std::int64_t n0, std::int64_t k0) const
{
    return Integer(static_cast<long>(a)) * static_cast<long>(n0)
           + Integer(static_cast<long>(b)) * static_cast<long>(k0) + static_cast<long>(c);
}

std::string to_string(const LinearForm& f) { return to_string(f.to_poly()); }

HyperTerm::HyperTerm(std::vector<FactorialPower> factors, Poly prefactor)
    : prefactor_(std::move(prefactor))
{
    std::map<LinearForm, int> merged;
    for (const auto& f : factors)
        merged[f.arg] += f.exp;
    for (const auto& [arg, exp] : merged) {
        if (exp == 0)
            continue;
        if (arg.a == 0 && arg.b == 0) {
            if (arg.c < 0) {
                if (exp > 0)
                    throw DomainError("factorial of negative constant " + std::to_string(arg.c));
                prefactor_ = Poly();
                continue;
            }
            Integer f = factorial(arg.c);
            Rational s = exp > 0 ? Rational(f) : Rational(1) / f;
            for (int i = 1; i < std::abs(exp); ++i)
                s *= exp > 0 ? Rational(f) : Rational(1) / f;
            prefactor_ *= s;
            continue;
        }
        factors_.push_back({arg, exp});
    }
    if (prefactor_.is_zero())
        throw DomainError("hypergeometric term with zero prefactor");
    std::stable_sort(factors_.begin(), factors_.end(),
                     [](const FactorialPower& x, const FactorialPower& y) {
                         if ((x.exp < 0) != (y.exp < 0))
                             return x.exp > 0;
                         return x.arg < y.arg;
                     });
}

HyperTerm HyperTerm::shifted(Var v, std::int64_t offset) const
{
    std::vector<FactorialPower> f = factors_;
    for (auto& x : f)
        x.arg = x.arg.shifted(v, offset);
    return HyperTerm(std::move(f), prefactor_.shifted(v, offset));
}

// ---------------------------------------------------------------- parsing

namespace {

struct TermValue {
    std::map<LinearForm, int> factorials;
    RatFunc pre{1};
};

std::int64_t to_small(const Rational& q, std::size_t at)
{
    if (q.get_den() != 1 || !q.get_num().fits_slong_p())
        throw ParseError("factorial argument must have integer coefficients", at);
    return q.get_num().get_si();
}

struct TermPolicy {
    using Value = TermValue;

    static void require_pure(const Value& v, std::size_t at)
    {
        if (!v.factorials.empty())
            throw ParseError("sums of factorial expressions are not hypergeometric terms", at);
    }

    Value number(const Integer& v, std::size_t) { return {{}, RatFunc(Rational(v))}; }
    Value name(const std::string& id, std::size_t at)
    {
        if (id == "n")
            return {{}, RatFunc::var(Var::n)};
        if (id == "k")
            return {{}, RatFunc::var(Var::k)};
        throw ParseError("unknown variable '" + id + "' (only n and k are allowed)", at);
    }
    Value call(const std::string& id, Value, std::size_t at)
    {
        throw ParseError("unexpected function '" + id + "'", at);
    }
    Value factorial(Value v, std::size_t at)
    {
        if (!v.factorials.empty() || !v.pre.is_polynomial())
            throw ParseError("factorial argument must be linear in n and k", at);
        Poly p = v.pre.num() * Rational(1 / v.pre.den().lead_coeff());
        if (p.deg_k() > 1 || p.deg_n() > 1 || p.term_count() > 3
            || (p.deg_k() == 1 && p.k_coeff(1).degree() > 0))
            throw ParseError("non-linear factorial argument " + to_string(p), at);
        LinearForm f{to_small(p.coeff(1, 0), at), to_small(p.coeff(0, 1), at),
                     to_small(p.coeff(0, 0), at)};
        Value r;
        r.factorials[f] = 1;
        return r;
    }
    Value add(Value a, Value b, std::size_t at)
    {
        require_pure(a, at);
        require_pure(b, at);
        return {{}, a.pre + b.pre};
    }
    Value sub(Value a, Value b, std::size_t at)
    {
        require_pure(a, at);
        require_pure(b, at);
        return {{}, a.pre - b.pre};
    }
    Value mul(Value a, Value b, std::size_t)
    {
        for (const auto& [f, e] : b.factorials)
            a.factorials[f] += e;
        a.pre *= b.pre;
        return a;
    }
    Value div(Value a, Value b, std::size_t at)
    {
        if (b.pre.is_zero())
            throw ParseError("division by zero", at);
        for (const auto& [f, e] : b.factorials)
            a.factorials[f] -= e;
        a.pre /= b.pre;
        return a;
    }
    Value neg(Value a, std::size_t)
    {
        a.pre = -a.pre;
        return a;
    }
    Value pow(Value a, long e, std::size_t at)
    {
        if (e < 0 && a.pre.is_zero())
            throw ParseError("division by zero", at);
        for (auto& [f, x] : a.factorials)
            x *= static_cast<int>(e);
        a.pre = a.pre.pow(static_cast<int>(e));
        return a;
    }
};

}  // namespace

HyperTerm parse_term(const std::string& text)
{
    TermPolicy policy;
    TermValue v = detail::ExprParser<TermPolicy>(text, policy).parse();
    if (!v.pre.is_polynomial())
        throw ParseError("prefactor " + to_string(v.pre)
                             + " is not a polynomial; write polynomial denominators as "
                               "factorial ratios",
                         0);
    if (v.pre.is_zero())
        throw ParseError("term is identically zero", 0);
    std::vector<FactorialPower> factors;
    for (const auto& [f, e] : v.factorials)
        factors.push_back({f, e});
    try {
        return HyperTerm(std::move(factors), v.pre.num() * Rational(1 / v.pre.den().lead_coeff()));
    } catch (const DomainError& e) {
        throw ParseError(e.what(), 0);
    }
}

namespace {

std::string render_factor(const FactorialPower& f, int exp)
{
    const LinearForm& a = f.arg;
    std::string s;
    if (a.c == 0 && ((a.a == 1 && a.b == 0) || (a.a == 0 && a.b == 1)))
        s = std::string(1, a.a == 1 ? 'n' : 'k') + "!";
    else
        s = "(" + to_string(a) + ")!";
    if (exp != 1)
        s += "^" + std::to_string(exp);
    return s;
}

}  // namespace

std::string to_string(const HyperTerm& t)
{
    std::vector<std::string> num, den;
    const Poly& p = t.prefactor();
    if (p != Poly(1))
        num.push_back(p.term_count() > 1 ? "(" + to_string(p) + ")" : to_string(p));
    for (const auto& f : t.factors()) {
        if (f.exp > 0)
            num.push_back(render_factor(f, f.exp));
        else
            den.push_back(render_factor(f, -f.exp));
    }
    auto join = [](const std::vector<std::string>& xs) {
        std::string s;
        for (std::size_t i = 0; i < xs.size(); ++i)
            s += (i ? "*" : "") + xs[i];
        return s;
    };
    std::string s = num.empty() ? "1" : join(num);
    if (den.size() == 1)
        s += "/" + den[0];
    else if (den.size() > 1)
        s += "/(" + join(den) + ")";
    return s;
}

RatFunc shift_quotient(const HyperTerm& t, Var v)
{
    Poly num(1), den(1);
    for (const auto& f : t.factors()) {
        const std::int64_t s = f.arg.coeff(v);
        if (s == 0)
            continue;
        // (L+s)!/L! = (L+1)...(L+s) for s > 0, 1/(L (L-1) ... (L+s+1)) for s < 0
        const Poly arg = f.arg.to_poly();
        Poly ratio(1);
        if (s > 0)
            for (std::int64_t i = 1; i <= s; ++i)
                ratio = ratio * (arg + Poly(Rational(static_cast<long>(i))));
        else
            for (std::int64_t i = 0; i > s; --i)
                ratio = ratio * (arg + Poly(Rational(static_cast<long>(i))));
        const bool up = (s > 0) == (f.exp > 0);
        Poly power = ratio.pow(static_cast<unsigned>(std::abs(f.exp)));
        (up ? num : den) = (up ? num : den) * power;
    }
    const Poly& p = t.prefactor();
    num = num * p.shifted(v, 1);
    den = den * p;
    return RatFunc(num, den);
}

Rational eval_term(const HyperTerm& t, std::int64_t n0, std::int64_t k0)
{
    bool vanishes = false;
    for (const auto& f : t.factors()) {
        Integer x = f.arg.eval(n0, k0);
        if (x < 0) {
            if (f.exp > 0)
                throw DomainError("factorial of negative argument " + x.get_str() + " in numerator");
            vanishes = true;
        }
    }
    if (vanishes)
        return 0;
    Integer num = 1, den = 1;
    for (const auto& f : t.factors()) {
        Integer fx = factorial(f.arg.eval(n0, k0).get_si());
        Integer pw;
        mpz_pow_ui(pw.get_mpz_t(), fx.get_mpz_t(), static_cast<unsigned long>(std::abs(f.exp)));
        (f.exp > 0 ? num : den) *= pw;
    }
    Rational r = make_rational(num, den);
    return r * t.prefactor().eval(Rational(static_cast<long>(n0)), Rational(static_cast<long>(k0)));
}

}  // namespace wzcert
