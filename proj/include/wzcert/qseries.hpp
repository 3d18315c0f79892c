#ifndef WZCERT_QSERIES_HPP
#define WZCERT_QSERIES_HPP

#include "wzcert/numeric.hpp"

#include <cstdint>
#include <vector>

namespace wzcert {

/// Power series c_0 + c_1 q + ... + c_N q^N + O(q^{N+1}) with integer
/// coefficients.  Binary operations on series of different truncation work
/// at the smaller one.
class Series {
public:
    // Zero series truncated at q^N.
    explicit Series(std::int64_t truncation);
    explicit Series(std::vector<Integer> coeffs);

    static Series one(std::int64_t truncation);

    std::int64_t truncation() const noexcept { return static_cast<std::int64_t>(c_.size()) - 1; }
    // Throws std::out_of_range beyond the truncation.
    const Integer& operator[](std::int64_t i) const;
    const std::vector<Integer>& coeffs() const noexcept { return c_; }

    Series truncated(std::int64_t truncation) const;
    // Requires c_0 = +-1; throws DomainError otherwise.
    Series invert() const;

    friend Series operator+(const Series& a, const Series& b);
    friend Series operator-(const Series& a, const Series& b);
    friend Series operator*(const Series& a, const Series& b);
    friend bool operator==(const Series&, const Series&) = default;

private:
    std::vector<Integer> c_;
};

// prod_{j >= 1} (1 - q^{multiplier j})^exponent
struct EtaFactor {
    std::int64_t multiplier = 1;
    int exponent = 1;
};

/// q^lead * prod over factors, truncated at q^N.
/// Requires N >= lead >= 0 and every multiplier >= 1.
Series eta_expand(const std::vector<EtaFactor>& factors, std::int64_t lead, std::int64_t truncation);

// sum_k C(n,k)^2 C(n+k,k)^2
Integer apery(std::int64_t n);

/// apery(n) mod p^2, computed with modular factorials and inverses.
/// Requires p an odd prime and 0 <= n < p.
Residue apery_mod(std::int64_t n, const Integer& p);

}  // namespace wzcert

#endif
