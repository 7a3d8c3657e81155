#include "bogocert/kummer.hpp"

#include "bogocert/errors.hpp"
#include "bogocert/hensel.hpp"
#include "bogocert/real.hpp"

#include <algorithm>

namespace bogocert {

namespace {
const char* kModule = "kummer";
constexpr double kEnumCap = 1e6;

Int alpha_power_exponent(const Int& ell, int f) {
    Int lf;
    mpz_pow_ui(lf.get_mpz_t(), ell.get_mpz_t(), static_cast<unsigned long>(f));
    return lf - 1;
}

FieldElement power_by_int(const FieldElement& base, const Int& e) {
    FieldElement result = FieldElement::from_rational(base.field(), Rat(1));
    FieldElement b = base;
    Int exp = e;
    while (exp > 0) {
        if (mpz_odd_p(exp.get_mpz_t())) result = result * b;
        b = b * b;
        exp >>= 1;
    }
    return result;
}

// v_P(z) >= k membership test for an integral element z given at precision K
// with K >= k*f + 2; exact threshold decision.
bool in_prime_power(const IntPoly& z_int, const PrimeFactor& P, int k) {
    IntPoly r = z_int.divmod_monic(P.local_block).second;
    Int modulus = int_pow(P.ell, P.k);
    r = poly_mod(r, modulus);
    if (P.e == 1) {
        // p^k = (ell^k, block) locally; membership is plain reduction
        IntPoly rr = poly_mod(r, int_pow(P.ell, static_cast<unsigned>(k)));
        return rr.is_zero();
    }
    if (r.is_zero()) return true; // v >= e*K >= k
    Int res = resultant(P.local_block, r);
    if (res == 0) return true;
    Int tmp = res;
    unsigned long v = mpz_remove(tmp.get_mpz_t(), res.get_mpz_t(), P.ell.get_mpz_t());
    (void)tmp;
    return v >= static_cast<unsigned long>(k) * static_cast<unsigned long>(P.f);
}

} // namespace

bool lth_power_solvable_mod_pk(const FieldElement& alpha, const Int& ell, const PrimeFactor& P0,
                               int k) {
    if (k < 1) throw_domain(kModule, "congruence depth must be >= 1");
    int ef = P0.e * P0.f;
    int coeff_levels = (k + P0.e - 1) / P0.e; // ceil(k/e)
    double count = 1;
    for (int i = 0; i < ef * coeff_levels; ++i) {
        count *= mpz_get_d(P0.ell.get_mpz_t());
        if (count > kEnumCap)
            throw_limit(kModule, "brute-force quotient exceeds 10^6 elements");
    }
    unsigned needed = static_cast<unsigned>(k * P0.f + 2);
    PrimeFactor P = relift(P0, std::max(P0.k, needed));

    // alpha = c/m with m a unit at P (precondition checked by callers)
    Int m = 1;
    for (const auto& q : alpha.coords()) mpz_lcm(m.get_mpz_t(), m.get_mpz_t(), q.get_den().get_mpz_t());
    std::vector<Int> ac(alpha.coords().size());
    for (size_t i = 0; i < alpha.coords().size(); ++i) {
        Rat v = alpha.coords()[i] * Rat(m);
        ac[i] = v.get_num();
    }
    IntPoly c(std::move(ac));

    Int level = int_pow(P.ell, static_cast<unsigned>(coeff_levels));
    std::vector<Int> digits(static_cast<size_t>(ef), Int(0));
    const IntPoly& f = P.field->minpoly();
    Int target_mod = int_pow(P.ell, P.k);
    while (true) {
        std::vector<Int> ycopy(digits);
        IntPoly y(std::move(ycopy));
        // z = m*y^ell - c  (so that z/m = y^ell - alpha; m is a unit at P)
        IntPoly ypow = IntPoly::one();
        {
            IntPoly base = y;
            Int e = ell;
            while (e > 0) {
                if (mpz_odd_p(e.get_mpz_t()))
                    ypow = poly_mod((ypow * base).divmod_monic(f).second, target_mod);
                base = poly_mod((base * base).divmod_monic(f).second, target_mod);
                e >>= 1;
            }
        }
        IntPoly z = ypow * m - c;
        z = z.divmod_monic(f).second;
        if (in_prime_power(z, P, k)) return true;
        // next candidate
        size_t pos = 0;
        while (pos < digits.size()) {
            digits[pos] += 1;
            if (digits[pos] < level) break;
            digits[pos] = 0;
            ++pos;
        }
        if (pos == digits.size()) return false;
    }
}

APrimeRecord a_invariant(const FieldElement& alpha, const Int& ell, const PrimeFactor& P) {
    APrimeRecord rec;
    rec.P = P;
    if (alpha.is_zero()) throw_domain(kModule, "alpha must be nonzero");
    if (valuation(alpha, P) != 0)
        throw_domain(kModule,
                     "hypothesis failed: alpha*O_F and ell*O_F must be coprime at this prime "
                     "(v_P(alpha) != 0)");
    // denominators of alpha must also be units at P
    for (const auto& q : alpha.coords())
        if (mpz_divisible_p(q.get_den().get_mpz_t(), ell.get_mpz_t()))
            throw_domain(kModule, "hypothesis failed: alpha has a denominator at ell");

    Int exponent = alpha_power_exponent(ell, P.f);
    FieldElement t = power_by_int(alpha, exponent) - FieldElement::from_rational(alpha.field(), Rat(1));
    if (t.is_zero()) throw_domain(kModule, "alpha^(ell^f - 1) = 1; invariant undefined");
    rec.w = valuation(t, P);

    // residue-search verification budget: quotient ell^(f*k) up to the cap
    auto feasible_k = [&](int k) {
        double q = mpz_get_d(ell.get_mpz_t());
        double quotient = 1;
        for (int i = 0; i < P.f * k; ++i) {
            quotient *= q;
            if (quotient > kEnumCap) return false;
        }
        return P.e == 1;
    };
    auto verify_bounded = [&](int a) {
        if (!feasible_k(a + 1)) return;
        if (!lth_power_solvable_mod_pk(alpha, ell, P, a))
            throw_internal(kModule, "shortcut/brute-force disagreement at k = a");
        if (lth_power_solvable_mod_pk(alpha, ell, P, a + 1))
            throw_internal(kModule, "shortcut/brute-force disagreement at k = a + 1");
    };
    auto verify_unbounded = [&]() {
        for (int k = rec.w + 1; k <= rec.w + 2; ++k) {
            if (!feasible_k(k)) return;
            if (!lth_power_solvable_mod_pk(alpha, ell, P, k))
                throw_internal(kModule, "unbounded branch contradicted by the residue search");
        }
    };

    if (rec.w == 1) {
        // every ell-th power of a unit lands at least two principal-unit
        // levels deep, so solvability stops exactly at k = 1
        rec.a = 1;
        rec.shortcut = true;
        verify_bounded(1);
        return rec;
    }
    if (P.e == 1 && ell != 2) {
        // unramified, odd ell: the ell-power map shifts principal-unit levels
        // by exactly one, so w >= 2 makes alpha an ell-th power locally
        rec.unbounded = true;
        rec.shortcut = true;
        verify_unbounded();
        return rec;
    }
    if (P.e == 1 && P.f == 1 && ell == 2) {
        // Z_2: odd squares are exactly 1 mod 8
        rec.shortcut = true;
        if (rec.w == 2) {
            rec.a = 2;
            verify_bounded(2);
        } else {
            rec.unbounded = true;
            verify_unbounded();
        }
        return rec;
    }

    // general case: monotone residue search with the enumeration cap
    rec.shortcut = false;
    int k = 1;
    while (lth_power_solvable_mod_pk(alpha, ell, P, k)) ++k;
    rec.a = k - 1;
    if (rec.a < 1) throw_internal(kModule, "a(p) < 1; x = alpha^(ell^(f-1)) must solve k = 1");
    return rec;
}

namespace {

KummerAnalysis analyze(const FieldPtr& F, const FieldElement& alpha, const Int& ell) {
    KummerAnalysis an;
    an.field = F;
    an.alpha = alpha;
    an.ell = ell;
    SplittingReport report = split_prime(F, ell);
    for (const auto& P : report.factors) an.primes.push_back(a_invariant(alpha, ell, P));
    return an;
}

} // namespace

KummerAnalysis check_acolem(const FieldPtr& F, const FieldElement& alpha, const Int& ell,
                            const Rat& rho) {
    if (rho < Rat(1, 2) || rho >= 1)
        throw_domain(kModule, "rho must lie in [1/2, 1)");
    KummerAnalysis an = analyze(F, alpha, ell);
    an.rho_used = rho;
    bool all = true;
    for (const auto& rec : an.primes) {
        // a <= 1 + ell(1 - rho)
        Rat bound = Rat(1) + Rat(ell) * (Rat(1) - rho);
        if (Rat(rec.a) > bound) all = false;
    }
    if (all) {
        an.conclusion = KummerConclusion::divides;
        Rat re = rho * Rat(ell);
        Int num = re.get_num(), den = re.get_den();
        Int q;
        mpz_cdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
        an.divides_exponent = q.get_si();
    } else {
        an.conclusion = KummerConclusion::inconclusive;
    }
    return an;
}

KummerAnalysis check_a1(const FieldPtr& F, const FieldElement& alpha, const Int& ell) {
    KummerAnalysis an = analyze(F, alpha, ell);
    an.rho_used = 1;
    bool all = true;
    for (const auto& rec : an.primes)
        if (rec.w != 1) all = false;
    if (all) {
        an.conclusion = KummerConclusion::totally_ramified_all;
        an.divides_exponent = ell.get_si();
        an.irreducible_certified = true; // a totally ramified prime of degree ell
    } else {
        an.conclusion = KummerConclusion::inconclusive;
    }
    return an;
}

long hecke_disc_valuation(long e, long a, long ell) {
    if (ell < 2) throw_domain(kModule, "ell must be prime");
    if (e % (ell - 1) != 0)
        throw_domain(kModule, "ell - 1 must divide e when the base contains the ell-th roots of unity");
    return ell * e + (ell - 1) * (1 - a);
}

ThresholdResult corollary_v_threshold(int d, double h_alpha, const Rat& rho) {
    if (d < 1) throw_domain(kModule, "degree must be >= 1");
    if (h_alpha < 0) throw_domain(kModule, "height must be >= 0");
    if (rho < Rat(1, 2) || rho >= 1) throw_domain(kModule, "rho must lie in [1/2, 1)");

    const mpfr_prec_t prec = 256;
    Real log2v = log(Real::of(2L, prec));
    Real dv = Real::of(static_cast<long>(d), prec);
    Real hv = Real::of(h_alpha, prec);
    Real one_minus_rho = Real::of(Rat(1) - rho, prec);

    // certified tail: both d*log2/log(l) <= 1 and d*h/log(l) <= 1 - rho
    Real t1 = exp(dv * log2v);
    Real t2 = exp(dv * hv / one_minus_rho);
    Real tail = max(t1, t2);
    const long scan_cap = 2000000;
    bool certified = tail < Real::of(scan_cap, prec);
    long bound = certified ? static_cast<long>(tail.to_double()) + 2 : scan_cap;

    ThresholdResult result;
    result.certified = certified;
    result.scanned_to = Int(bound);
    Int last_fail = 0;
    Int p = 1;
    while (true) {
        mpz_nextprime(p.get_mpz_t(), p.get_mpz_t());
        if (p > bound) break;
        Real lv = Real::of(p, prec);
        Real loglv = log(lv);
        Real lhs = dv * log2v / loglv + (lv - Real::of(1L, prec)) * dv * hv / loglv;
        Real rhs = Real::of(1L, prec) + lv * one_minus_rho;
        if (lhs > rhs) last_fail = p;
    }
    if (last_fail == 0) {
        result.c = 2;
    } else {
        Int c = last_fail;
        mpz_nextprime(c.get_mpz_t(), c.get_mpz_t());
        result.c = c;
    }
    return result;
}

} // namespace bogocert
