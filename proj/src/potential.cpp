#include "wzcert/potential.hpp"

#include "wzcert/detail/expr_parser.hpp"
#include "wzcert/errors.hpp"

#include <map>

namespace wzcert {

Potential::Potential(std::vector<HarmonicTerm> hterms, RatFunc ratpart)
    : ratpart_(std::move(ratpart))
{
    std::map<LinearForm, Rational> merged;
    for (const auto& h : hterms) {
        if (h.arg.a < -1 || h.arg.a > 1 || h.arg.b < -1 || h.arg.b > 1)
            throw DomainError("harmonic argument " + to_string(h.arg)
                              + " moves by more than one per unit shift");
        merged[h.arg] += h.coef;
    }
    for (const auto& [arg, coef] : merged)
        if (coef != 0)
            hterms_.push_back({coef, arg});
}

Potential Potential::shifted(Var v, std::int64_t offset) const
{
    std::vector<HarmonicTerm> h = hterms_;
    for (auto& x : h)
        x.arg = x.arg.shifted(v, offset);
    return Potential(std::move(h), ratpart_.shifted(v, offset));
}

Potential paper_potential()
{
    return Potential({{Rational(1), {1, 1, 0}}, {Rational(1), {1, -1, 0}}, {Rational(-2), {0, 1, 0}}},
                     RatFunc(Poly(1), Poly::linear(0, 2, 0)));
}

Rational eval_potential(const Potential& c, std::int64_t n0, std::int64_t k0)
{
    Rational r = 0;
    for (const auto& h : c.hterms()) {
        Integer m = h.arg.eval(n0, k0);
        if (m < 0)
            throw DomainError("harmonic number H(" + m.get_str() + ") of negative index");
        r += h.coef * harmonic(m.get_si());
    }
    return r + c.ratpart().eval(Rational(static_cast<long>(n0)), Rational(static_cast<long>(k0)));
}

std::vector<RatFunc> delta_pieces(const Potential& c, Var v)
{
    std::vector<RatFunc> pieces;
    for (const auto& h : c.hterms()) {
        switch (h.arg.coeff(v)) {
        case 1:  // H(L+1) - H(L) = 1/(L+1)
            pieces.emplace_back(Poly(h.coef), h.arg.shifted(v, 1).to_poly());
            break;
        case -1:  // H(L-1) - H(L) = -1/L
            pieces.emplace_back(Poly(-h.coef), h.arg.to_poly());
            break;
        default:
            break;
        }
    }
    RatFunc r = c.ratpart().shifted(v, 1) - c.ratpart();
    if (!r.is_zero())
        pieces.push_back(std::move(r));
    return pieces;
}

RatFunc delta(const Potential& c, Var v)
{
    RatFunc sum;
    for (const auto& p : delta_pieces(c, v))
        sum += p;
    return sum;
}

// ---------------------------------------------------------------- text

namespace {

struct PotValue {
    std::map<LinearForm, Rational> h;
    RatFunc r;
};

struct PotentialPolicy {
    using Value = PotValue;

    static bool is_const(const RatFunc& f) { return f.is_polynomial() && f.num().is_constant(); }
    static Rational const_value(const RatFunc& f)
    {
        return f.is_zero() ? Rational(0) : f.num().lead_coeff() / f.den().lead_coeff();
    }
    static Value scaled(Value v, const Rational& s)
    {
        for (auto& [arg, coef] : v.h)
            coef *= s;
        v.r *= RatFunc(s);
        return v;
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
    Value call(const std::string& id, Value arg, std::size_t at)
    {
        if (id != "H")
            throw ParseError("unknown function '" + id + "' (only H is allowed)", at);
        if (!arg.h.empty() || !arg.r.is_polynomial())
            throw ParseError("harmonic argument must be linear in n and k", at);
        Poly p = arg.r.num();
        auto small = [at](const Rational& q) {
            if (q.get_den() != 1 || !q.get_num().fits_slong_p())
                throw ParseError("harmonic argument must have integer coefficients", at);
            return static_cast<std::int64_t>(q.get_num().get_si());
        };
        if (p.deg_k() > 1 || p.deg_n() > 1 || p.term_count() > 3
            || (p.deg_k() == 1 && p.k_coeff(1).degree() > 0))
            throw ParseError("non-linear harmonic argument " + to_string(p), at);
        Value v;
        v.h[{small(p.coeff(1, 0)), small(p.coeff(0, 1)), small(p.coeff(0, 0))}] = 1;
        return v;
    }
    Value factorial(Value, std::size_t at)
    {
        throw ParseError("factorial not allowed in a potential", at);
    }
    Value add(Value a, Value b, std::size_t)
    {
        for (const auto& [arg, coef] : b.h)
            a.h[arg] += coef;
        a.r += b.r;
        return a;
    }
    Value sub(Value a, Value b, std::size_t at) { return add(std::move(a), neg(std::move(b), at), at); }
    Value mul(Value a, Value b, std::size_t at)
    {
        if (a.h.empty() && b.h.empty())
            return {{}, a.r * b.r};
        if (a.h.empty() && is_const(a.r))
            return scaled(std::move(b), const_value(a.r));
        if (b.h.empty() && is_const(b.r))
            return scaled(std::move(a), const_value(b.r));
        throw ParseError("harmonic numbers may only be multiplied by rational constants", at);
    }
    Value div(Value a, Value b, std::size_t at)
    {
        if (!b.h.empty())
            throw ParseError("cannot divide by a harmonic number", at);
        if (b.r.is_zero())
            throw ParseError("division by zero", at);
        if (a.h.empty())
            return {{}, a.r / b.r};
        if (!is_const(b.r))
            throw ParseError("harmonic numbers may only be divided by rational constants", at);
        return scaled(std::move(a), 1 / const_value(b.r));
    }
    Value neg(Value a, std::size_t) { return scaled(std::move(a), Rational(-1)); }
    Value pow(Value a, long e, std::size_t at)
    {
        if (!a.h.empty())
            throw ParseError("powers of harmonic numbers are not supported", at);
        if (e < 0 && a.r.is_zero())
            throw ParseError("division by zero", at);
        return {{}, a.r.pow(static_cast<int>(e))};
    }
};

std::string render_coef_h(const Rational& coef, const LinearForm& arg, bool first)
{
    std::string h = "H(" + to_string(arg) + ")";
    Rational mag = abs(coef);
    std::string body = mag == 1 ? h : mag.get_str() + "*" + h;
    if (first)
        return (coef < 0 ? "-" : "") + body;
    return (coef < 0 ? " - " : " + ") + body;
}

}  // namespace

Potential parse_potential(const std::string& text)
{
    PotentialPolicy policy;
    PotValue v = detail::ExprParser<PotentialPolicy>(text, policy).parse();
    std::vector<HarmonicTerm> h;
    for (const auto& [arg, coef] : v.h)
        h.push_back({coef, arg});
    try {
        return Potential(std::move(h), v.r);
    } catch (const DomainError& e) {
        throw ParseError(e.what(), 0);
    }
}

std::string to_string(const Potential& c)
{
    std::string s;
    bool first = true;
    if (!c.ratpart().is_zero()) {
        s = to_string(c.ratpart());
        first = false;
    }
    for (const auto& h : c.hterms()) {
        s += render_coef_h(h.coef, h.arg, first);
        first = false;
    }
    return first ? "0" : s;
}

}  // namespace wzcert
