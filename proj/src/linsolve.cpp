#include "wzcert/detail/linsolve.hpp"

#include "wzcert/errors.hpp"

#include <algorithm>
#include <limits>

namespace wzcert::detail {

namespace {

// Element of Q(n): num/den coprime, den monic.
struct NFrac {
    UPoly num;
    UPoly den{1};

    NFrac() = default;
    NFrac(UPoly n) : num(std::move(n)) {}  // NOLINT(google-explicit-constructor)
    NFrac(UPoly n, UPoly d)
    {
        if (n.is_zero())
            return;
        UPoly g = gcd(n, d);
        if (g.degree() > 0) {
            n = exact_div(n, g);
            d = exact_div(d, g);
        }
        Rational s = 1 / d.lc();
        num = n * s;
        den = d * s;
    }

    bool is_zero() const { return num.is_zero(); }
    int size() const { return num.degree() + den.degree(); }
};

NFrac operator*(const NFrac& a, const NFrac& b)
{
    if (a.is_zero() || b.is_zero())
        return {};
    if (a.den.degree() == 0 && b.den.degree() == 0)
        return NFrac(a.num * b.num);
    return NFrac(a.num * b.num, a.den * b.den);
}

NFrac operator-(const NFrac& a, const NFrac& b)
{
    if (b.is_zero())
        return a;
    if (a.den == b.den) {
        if (a.den.degree() == 0)
            return NFrac(a.num - b.num);
        return NFrac(a.num - b.num, a.den);
    }
    return NFrac(a.num * b.den - b.num * a.den, a.den * b.den);
}

NFrac inverse(const NFrac& a) { return NFrac(a.den, a.num); }

}  // namespace

std::vector<std::vector<UPoly>> nullspace_qn(const std::vector<std::vector<UPoly>>& rows,
                                             std::size_t cols)
{
    std::vector<std::vector<NFrac>> m;
    m.reserve(rows.size());
    for (const auto& row : rows) {
        if (row.size() != cols)
            throw DomainError("ragged matrix");
        if (std::all_of(row.begin(), row.end(), [](const UPoly& x) { return x.is_zero(); }))
            continue;
        // divide out the row content
        UPoly g;
        for (const auto& x : row)
            g = gcd(g, x);
        Integer num_gcd = 0, den_lcm = 1;
        for (const auto& x : row)
            for (const auto& c : x.coeffs()) {
                if (c == 0)
                    continue;
                mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num_mpz_t());
                mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
            }
        const Rational s = make_rational(den_lcm, num_gcd);
        std::vector<NFrac> r;
        r.reserve(cols);
        for (const auto& x : row)
            r.emplace_back(x.is_zero() ? x : exact_div(x, g) * s);
        m.push_back(std::move(r));
    }

    std::vector<std::size_t> pivot_cols;
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
        std::size_t best = m.size();
        int best_size = std::numeric_limits<int>::max();
        for (std::size_t i = rank; i < m.size(); ++i)
            if (!m[i][c].is_zero() && m[i][c].size() < best_size) {
                best = i;
                best_size = m[i][c].size();
            }
        if (best == m.size())
            continue;
        std::swap(m[rank], m[best]);
        NFrac inv = inverse(m[rank][c]);
        for (std::size_t j = c; j < cols; ++j)
            m[rank][j] = m[rank][j] * inv;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i == rank || m[i][c].is_zero())
                continue;
            NFrac f = m[i][c];
            for (std::size_t j = c; j < cols; ++j)
                if (!m[rank][j].is_zero())
                    m[i][j] = m[i][j] - f * m[rank][j];
        }
        pivot_cols.push_back(c);
        ++rank;
    }

    std::vector<bool> is_pivot(cols, false);
    for (auto c : pivot_cols)
        is_pivot[c] = true;

    std::vector<std::vector<UPoly>> basis;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f])
            continue;
        std::vector<NFrac> v(cols);
        v[f] = NFrac(UPoly(1));
        for (std::size_t i = 0; i < pivot_cols.size(); ++i)
            if (!m[i][f].is_zero())
                v[pivot_cols[i]] = NFrac(-m[i][f].num, m[i][f].den);
        // clear denominators, then strip the common factor
        UPoly l(1);
        for (const auto& x : v)
            if (!x.is_zero())
                l = exact_div(l * x.den, gcd(l, x.den));
        std::vector<UPoly> out(cols);
        UPoly g;
        for (std::size_t j = 0; j < cols; ++j) {
            if (v[j].is_zero())
                continue;
            out[j] = v[j].num * exact_div(l, v[j].den);
            g = gcd(g, out[j]);
        }
        Integer num_gcd = 0, den_lcm = 1;
        for (auto& x : out) {
            if (x.is_zero())
                continue;
            if (g.degree() > 0)
                x = exact_div(x, g);
            for (const auto& c : x.coeffs()) {
                if (c == 0)
                    continue;
                mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num_mpz_t());
                mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
            }
        }
        Rational s = make_rational(den_lcm, num_gcd);
        for (auto& x : out)
            x *= s;
        basis.push_back(std::move(out));
    }
    return basis;
}

std::vector<std::vector<Rational>> nullspace_q(std::vector<std::vector<Rational>> m,
                                               std::size_t cols)
{
    std::vector<std::size_t> pivot_cols;
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
        std::size_t best = m.size();
        for (std::size_t i = rank; i < m.size(); ++i)
            if (m[i][c] != 0) {
                best = i;
                break;
            }
        if (best == m.size())
            continue;
        std::swap(m[rank], m[best]);
        Rational inv = 1 / m[rank][c];
        for (std::size_t j = c; j < cols; ++j)
            m[rank][j] *= inv;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i == rank || m[i][c] == 0)
                continue;
            Rational f = m[i][c];
            for (std::size_t j = c; j < cols; ++j)
                if (m[rank][j] != 0)
                    m[i][j] -= f * m[rank][j];
        }
        pivot_cols.push_back(c);
        ++rank;
    }
    std::vector<bool> is_pivot(cols, false);
    for (auto c : pivot_cols)
        is_pivot[c] = true;
    std::vector<std::vector<Rational>> basis;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f])
            continue;
        std::vector<Rational> v(cols);
        v[f] = 1;
        for (std::size_t i = 0; i < pivot_cols.size(); ++i)
            v[pivot_cols[i]] = -m[i][f];
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace wzcert::detail
