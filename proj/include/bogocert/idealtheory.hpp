#ifndef BOGOCERT_IDEALTHEORY_HPP
#define BOGOCERT_IDEALTHEORY_HPP

#include "bogocert/numberfield.hpp"

#include <string>
#include <vector>

namespace bogocert {

/// One prime p over ell, described through the factorization of the minimal
/// polynomial: residue factor g (irreducible mod ell, canonical lift),
/// ramification index e (multiplicity), residue degree f = deg g, and the
/// Hensel-lifted local block of degree e*f carried to precision ell^k.
struct PrimeFactor {
    FieldPtr field;
    Int ell;
    IntPoly residue_factor;
    int e = 1;
    int f = 1;
    IntPoly local_block;
    unsigned k = 0;

    bool same_prime(const PrimeFactor& o) const {
        return ell == o.ell && residue_factor == o.residue_factor;
    }
};

struct SplittingReport {
    FieldPtr field;
    Int ell;
    bool dedekind_ok = false;
    std::vector<PrimeFactor> factors;

    std::string to_text() const;
};

/// Dedekind criterion: true iff ell does not divide [O_F : Z[theta]].
bool dedekind_check(const FieldPtr& field, const Int& ell);

/// Splitting of ell through factorization of the minimal polynomial; requires
/// the Dedekind check (error naming ell otherwise). sum e*f = degree.
SplittingReport split_prime(const FieldPtr& field, const Int& ell, unsigned k = 32);

/// Same prime carried to at least precision ell^k (fresh value; never mutates).
PrimeFactor relift(const PrimeFactor& P, unsigned k);

/// v_P(beta) normalized with v_P(uniformizer) = 1, v_P(ell) = e. Computed from
/// the ell-valuation of the local-block resultant (the local norm) divided by
/// the residue degree, raising the lift precision until the value is stable.
int valuation(const FieldElement& beta, const PrimeFactor& P);

/// Element with v_P = 1 and nonnegative valuation at the other primes over ell.
FieldElement uniformizer(const PrimeFactor& P);

struct CrtTarget {
    PrimeFactor P;
    FieldElement beta; // integral
    int k = 1;         // required congruence depth v_P(alpha - beta) >= k
};

/// Chinese remainder solve across distinct primes (grouped by ell; combined
/// with integer CRT across different ell).
FieldElement crt_solve(const std::vector<CrtTarget>& targets);

} // namespace bogocert

#endif
