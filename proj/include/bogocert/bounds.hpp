#ifndef BOGOCERT_BOUNDS_HPP
#define BOGOCERT_BOUNDS_HPP

#include "bogocert/boundexpr.hpp"
#include "bogocert/kummer.hpp"

#include <optional>
#include <string>
#include <vector>

namespace bogocert {

/// s^(-delta/(2d(s-1))) * N^(1/(2ds(s-1))) for gamma generating B/M with
/// [B:M] = s, [B:Q] = d_abs, delta = archimedean places of M, N = N(D_{B/M}).
BoundExpr silverman_bound(long s, long d_abs, long delta_M, const Int& norm_rel_disc);

/// (2^(-d/r) + sqrt(1 + 4^(-d/r)))^(r/(2d)) for degree d with r >= 1 real places.
BoundExpr garza_bound(long d, long r);

struct FamilyEntry {
    long e = 1;     // [M:F]
    Int norm_DM = 1; // N_{F/Q}(D_{M/F})
};

struct ExcessInput {
    Int norm_DC; // N_{F/Q}(D_{C/F})
    long s = 2;  // [C:F]
    bool disjoint = false;           // attested: primes of D_{C/F} unramified in K/F
    std::vector<FamilyEntry> family; // used when !disjoint
};

struct ExcessValue {
    PowProduct value;
    bool certified_lower = false; // only disjoint evidence certifies a lower bound
};

/// Norm excess discriminant under the given evidence. Disjoint evidence gives
/// exactly norm_DC; a finite family gives the prime-by-prime minimum
/// N(D_C^e / gcd(D_C^e, D_M^s))^(1/e), an upper bound on the true infimum.
ExcessValue excess_discriminant(const ExcessInput& input);

struct SubextDatum {
    long s = 2;
    PowProduct excess;
};

struct RelboResult {
    bool pass = false; // strict excess > s^(rho*s) at every datum
    BoundExpr bound;   // min over data of (excess * s^(-rho s))^(1/(2ds(s-1)))
};

/// Ramification criterion bound; rho in [d/2, d].
RelboResult relbocrit_bound(long d, const Rat& rho, const std::vector<SubextDatum>& data);

/// Single-subextension form: s^(-rho/(2d(s-1))) * excess^(1/(2ds(s-1))).
BoundExpr prefall_bound(long s, long d, const Rat& rho_MF, const PowProduct& excess);

/// theta split optimization for the rho = d branch: maximizes
/// min( ell^((1-theta)/(2(ell-1))), garza(2*theta - 1 - (ell-1)/ell) )
/// over theta in ((2*ell-1)/(2*ell), 1). Returns theta as an exact rational
/// (rounded to 1e-15) together with the two branch expressions.
struct ThetaSplit {
    Rat theta;
    BoundExpr nonarch; // ell^((1-theta)/(2(ell-1)))
    BoundExpr arch;    // garza(phi), phi = 2 theta - 1 - (ell-1)/ell
    BoundExpr combined; // min of the two
};
ThetaSplit optimize_theta(long ell);

struct Certificate {
    std::vector<std::string> field_minpoly;
    int degree = 1;
    int signature_r = 0;
    int signature_rp = 0;
    Int ell;
    std::vector<std::string> alpha_coords;
    Rat rho;
    std::string rho_provenance;
    std::vector<std::string> assumptions;
    // kummer verification data
    struct PrimeRecord {
        std::vector<std::string> g;
        int e = 1, f = 1, a = 1, w = 1;
        bool shortcut = true;
    };
    std::vector<PrimeRecord> primes;
    bool irreducible_certified = false;
    std::string branch; // "nonbound" | "archbound"
    std::optional<Rat> theta;
    BoundExpr epsilon;
    std::string epsilon_decimal; // 15 significant digits
};

/// Assembles a height-gap certificate for K(alpha^(1/ell))/K from a base field
/// F inside K. Requires the a=1 certification (total ramification over ell) and
/// a declared rho(K/F) in [d/2, d] with at least one attestation. rho < d uses
/// the non-archimedean bound ell^((d-rho)/(2d(ell-1))); rho = d uses the
/// optimized theta split.
Certificate finram_certificate(const FieldPtr& F, const FieldElement& alpha, const Int& ell,
                               const Rat& rho, const std::string& rho_provenance,
                               const std::vector<std::string>& attestations);

std::string certificate_to_json(const Certificate& cert);
Certificate certificate_from_json(const std::string& text);

struct VerifyResult {
    bool ok = false;
    std::string detail;
};

/// Recomputes the certificate from its recorded inputs and compares the bound
/// expression symbolically and the decimal to 1e-12.
VerifyResult verify_certificate(const std::string& json_text);

} // namespace bogocert

#endif
