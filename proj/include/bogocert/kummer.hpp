#ifndef BOGOCERT_KUMMER_HPP
#define BOGOCERT_KUMMER_HPP

#include "bogocert/idealtheory.hpp"

#include <optional>

namespace bogocert {

/// Per-prime record of the congruence invariant a(p): the greatest k such that
/// x^ell = alpha is solvable mod p^k. When the congruence is solvable at every
/// depth (alpha is an ell-th power in the completion), unbounded is set and a
/// carries no meaning.
struct APrimeRecord {
    PrimeFactor P;
    int a = 0;
    bool unbounded = false;
    bool shortcut = false; // a came from the valuation shortcut
    int w = 0;             // v_P(alpha^(ell^f - 1) - 1)
};

enum class KummerConclusion { divides, totally_ramified_all, inconclusive };

struct KummerAnalysis {
    FieldPtr field;
    std::optional<FieldElement> alpha;
    Int ell;
    std::vector<APrimeRecord> primes;
    Rat rho_used;              // condition parameter; 1 marks the a=1 branch
    KummerConclusion conclusion = KummerConclusion::inconclusive;
    long divides_exponent = 0; // ell^exponent divides the relative discriminant
    bool irreducible_certified = false;
};

/// a(p) with w = v_P(alpha^(ell^f - 1) - 1):
///  - w = 1 forces a = 1 (the unit part of alpha sits exactly one principal-
///    unit level deep, while every ell-th power lies at least two deep);
///  - for e = 1 and odd ell, w >= 2 makes alpha an ell-th power in the
///    completion: solvable at every depth (unbounded);
///  - for ell = 2, e = f = 1: a = 2 when w = 2, unbounded when w >= 3;
///  - otherwise brute-force residue search over the finite quotient.
/// Cross-checked against the residue search whenever the quotient fits 10^6
/// elements. Preconditions: v_P(alpha) = 0 (ell*O and alpha*O coprime at P).
APrimeRecord a_invariant(const FieldElement& alpha, const Int& ell, const PrimeFactor& P);

/// Divisibility conclusion: if a(p) <= 1 + ell(1-rho) at every p | ell then
/// ell^ceil(rho*ell) divides the relative discriminant of the Kummer step.
KummerAnalysis check_acolem(const FieldPtr& F, const FieldElement& alpha, const Int& ell,
                            const Rat& rho);

/// w = 1 at every prime over ell: all of them totally ramified in the Kummer
/// step, ell^ell divides the relative discriminant, and x^ell - alpha is
/// certified irreducible over F.
KummerAnalysis check_a1(const FieldPtr& F, const FieldElement& alpha, const Int& ell);

/// Exact local discriminant exponent (ell-1) * (ell*e/(ell-1) + 1 - a) for a
/// base containing the ell-th roots of unity; requires (ell-1) | e.
long hecke_disc_valuation(long e, long a, long ell);

/// Brute-force solvability of x^ell = alpha mod p^k over the finite quotient.
/// Error if the enumeration exceeds 10^6 candidates.
bool lth_power_solvable_mod_pk(const FieldElement& alpha, const Int& ell, const PrimeFactor& P,
                               int k);

struct ThresholdResult {
    Int c;           // smallest prime such that the inequality holds onward
    bool certified;  // tail bound reached within the scan cap
    Int scanned_to;  // last prime bound examined
    bool no_threshold = false;
};

/// Smallest prime c with d*log2/log(l) + (l-1)*d*h/log(l) <= 1 + l(1-rho) for
/// all primes l >= c, by monotone scan with a certified analytic tail bound.
ThresholdResult corollary_v_threshold(int d, double h_alpha, const Rat& rho);

} // namespace bogocert

#endif
