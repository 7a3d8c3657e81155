#ifndef BOGOCERT_ROOTS_HPP
#define BOGOCERT_ROOTS_HPP

#include "bogocert/intpoly.hpp"
#include "bogocert/real.hpp"

#include <vector>

namespace bogocert {

struct RootBall {
    Complex center;
    Real radius; // disk around center certified to contain exactly one root
};

struct IsolatedRoots {
    std::vector<RootBall> balls; // one per root, pairwise disjoint disks
    mpfr_prec_t prec = 0;
};

/// Certified complex root isolation for a squarefree integer polynomial.
/// Aberth/Durand-Kerner iteration with inclusion disks r = deg * |f(z)/f'(z)|;
/// the working precision doubles until the disks are pairwise disjoint and each
/// radius is below 10^-digits. Throws a limit error if the precision cap is hit.
IsolatedRoots isolate_roots(const IntPoly& f, long digits);

/// log of the Mahler measure of f (natural log) with a certified error bound:
/// log|lead(f)| + sum of log^+ |root|.
struct MahlerLog {
    Real value;
    Real error;
};
MahlerLog mahler_log(const IntPoly& f, long digits);

/// sum over the given balls of log^+ |u + w * z| plus log|lead|, with error
/// accounting; used for fast height evaluation of affine images of a fixed
/// generator without re-isolating roots.
MahlerLog mahler_log_affine(const IntPoly& f_primitive_new, const IsolatedRoots& roots_of_f,
                            const Rat& u, const Rat& w);

} // namespace bogocert

#endif
