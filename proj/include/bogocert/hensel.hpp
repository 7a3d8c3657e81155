#ifndef BOGOCERT_HENSEL_HPP
#define BOGOCERT_HENSEL_HPP

#include "bogocert/intpoly.hpp"

#include <vector>

namespace bogocert {

/// Multifactor Hensel lifting. blocks are monic and pairwise coprime mod ell
/// with product congruent to f mod ell (f monic). Returns monic blocks with
/// coefficients canonical in [0, ell^k), product congruent to f mod ell^k and
/// each block congruent to its input mod ell.
std::vector<IntPoly> hensel_lift_blocks(const IntPoly& f, const std::vector<IntPoly>& blocks,
                                        const Int& ell, unsigned k);

/// ell^k
Int int_pow(const Int& ell, unsigned k);

/// canonical reduction of every coefficient into [0, m)
IntPoly poly_mod(const IntPoly& f, const Int& m);

} // namespace bogocert

#endif
