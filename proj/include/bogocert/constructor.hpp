#ifndef BOGOCERT_CONSTRUCTOR_HPP
#define BOGOCERT_CONSTRUCTOR_HPP

#include "bogocert/bounds.hpp"

#include <string>
#include <vector>

namespace bogocert {

struct AlphaConstruction {
    FieldElement alpha;
    // per prime over ell: the prime and the verified w = v_P(alpha^(ell^f-1) - 1) = 1
    std::vector<std::pair<PrimeFactor, int>> verification;
};

/// The admissible element: beta_i = 1 + pi_i at each prime over ell (all
/// required unramified), glued by CRT mod p_i^2, then verified to satisfy
/// v_{p_i}(alpha^(ell^f - 1) - 1) = 1 at every prime.
AlphaConstruction construct_alpha(const FieldPtr& F, const Int& ell);

struct WitnessItem {
    int k = 0;
    Rat x;               // -1/3 + 2^-k
    Rat coefficient;     // 2^-k, exact height = coefficient * log(height_base)
    Int height_base;     // max(|num|, den) of b
    std::string formula; // e.g. "2^-3 * log(2)"
    std::string decimal; // 15 significant digits
    bool below_target = false;
};

struct WitnessSequence {
    std::string description;
    std::vector<WitnessItem> items;
    long first_k_below = -1; // first k with height < eps_target (-1 if none found)
};

/// Small-height witnesses b^(x + 1/3) with x = -1/3 + 2^-k: heights
/// 2^-k * h(b), strictly decreasing to 0. b must be > 1 and not a square.
WitnessSequence nonbog_witnesses(const Rat& b, int k_max, double eps_target);

/// (p/4)^(1/4) for a prime p = 3 mod 4, p > 3, derived through the norm excess
/// discriminant (the 2-part of disc = 4p cancels against a prior quadratic
/// level; the p-part survives) and the single-subextension bound.
BoundExpr tower_bound_42(const Int& p);

struct TowerStep {
    int index = 1;
    long b = 12;
    Int disc;              // computed by resultant
    Int formula_disc;      // b^b - (b-1)^(b-1), the closed form for 4 | b
    std::string height_upper;   // log2/(b-1), decimal
    std::string root_height;    // engine value, decimal
    Int split_prime;            // splits completely in every prior step
};

/// One step of the trinomial tower x^b + x + 1: verifies the discriminant
/// closed form, checks coprimality with all prior steps' discriminants,
/// certifies irreducibility, finds a prime splitting completely in the prior
/// steps, and confirms the root-height window (0, log2/(b-1)].
TowerStep trinomial_step(const std::vector<TowerStep>& prior, long b);

} // namespace bogocert

#endif
