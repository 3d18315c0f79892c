#ifndef WZCERT_DETAIL_LINSOLVE_HPP
#define WZCERT_DETAIL_LINSOLVE_HPP

#include "wzcert/numeric.hpp"
#include "wzcert/poly.hpp"

#include <vector>

namespace wzcert::detail {

/// Basis of the right nullspace over Q(n) of a matrix whose entries are
/// polynomials in n.  Each basis vector has polynomial entries with the common
/// denominator cleared and the common polynomial factor removed.
///
/// Gauss-Jordan elimination over Q(n); pivots are taken left to right, so the
/// free columns, and hence the basis, favour the rightmost unknowns.  Basis
/// vector i has a 1-direction in the i-th free column and zeros in the others.
std::vector<std::vector<UPoly>> nullspace_qn(const std::vector<std::vector<UPoly>>& rows,
                                             std::size_t cols);

// Same over Q.
std::vector<std::vector<Rational>> nullspace_q(std::vector<std::vector<Rational>> rows,
                                               std::size_t cols);

}  // namespace wzcert::detail

#endif
