#include "bogocert/constructor.hpp"

#include "bogocert/errors.hpp"
#include "bogocert/hensel.hpp"
#include "bogocert/modpoly.hpp"

#include <sstream>

namespace bogocert {

namespace {
const char* kModule = "constructor";

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
} // namespace

AlphaConstruction construct_alpha(const FieldPtr& F, const Int& ell) {
    SplittingReport report = split_prime(F, ell);
    for (const auto& P : report.factors)
        if (P.e != 1)
            throw_domain(kModule, "unsupported configuration: " + ell.get_str() +
                                      " ramifies in the base field (e = " + std::to_string(P.e) +
                                      ")");

    std::vector<CrtTarget> targets;
    targets.reserve(report.factors.size());
    for (const auto& P : report.factors) {
        FieldElement pi = uniformizer(P);
        FieldElement beta = pi + FieldElement::from_rational(F, Rat(1));
        targets.push_back({P, std::move(beta), 2});
    }
    FieldElement alpha = crt_solve(targets);

    AlphaConstruction out{alpha, {}};
    for (const auto& P : report.factors) {
        Int lf;
        mpz_pow_ui(lf.get_mpz_t(), ell.get_mpz_t(), static_cast<unsigned long>(P.f));
        FieldElement t = power_by_int(alpha, lf - 1) - FieldElement::from_rational(F, Rat(1));
        int w = valuation(t, P);
        if (w != 1)
            throw_internal(kModule, "construction failed verification: w = " + std::to_string(w));
        out.verification.emplace_back(P, w);
    }
    return out;
}

WitnessSequence nonbog_witnesses(const Rat& b, int k_max, double eps_target) {
    if (b <= 1) throw_domain(kModule, "b must exceed 1");
    if (mpz_perfect_square_p(b.get_num().get_mpz_t()) &&
        mpz_perfect_square_p(b.get_den().get_mpz_t()))
        throw_domain(kModule, "b must not be a square");
    if (k_max < 2) throw_domain(kModule, "k_max must be >= 2");

    Int base = abs(Int(b.get_num()));
    if (base < b.get_den()) base = b.get_den();

    const mpfr_prec_t prec = 192;
    Real logb = log(Real::of(base, prec));
    Real eps = Real::of(eps_target, prec);

    WitnessSequence seq;
    seq.description = "b^(x + 1/3) with x = -1/3 + 2^-k, b = " + b.get_str();

    int k_stop = k_max;
    // extend until the first witness under the target, within a hard cap
    long hard_cap = 2000;
    for (int k = 2; k <= hard_cap; ++k) {
        Real h = two_pow(-k, prec) * logb;
        bool below = eps_target > 0 && h < eps;
        if (k <= k_stop || (eps_target > 0 && seq.first_k_below < 0)) {
            WitnessItem item;
            item.k = k;
            item.x = Rat(-1, 3) + Rat(Int(1), int_pow(Int(2), static_cast<unsigned>(k)));
            item.coefficient = Rat(Int(1), int_pow(Int(2), static_cast<unsigned>(k)));
            item.height_base = base;
            item.formula = "2^-" + std::to_string(k) + " * log(" + base.get_str() + ")";
            item.decimal = h.to_string(15);
            item.below_target = below;
            seq.items.push_back(std::move(item));
        }
        if (below && seq.first_k_below < 0) seq.first_k_below = k;
        if (k >= k_stop && (eps_target <= 0 || seq.first_k_below >= 0)) break;
    }
    return seq;
}

BoundExpr tower_bound_42(const Int& p) {
    if (mpz_probab_prime_p(p.get_mpz_t(), 30) == 0)
        throw_domain(kModule, p.get_str() + " is not prime");
    if (p % 4 != 3) throw_domain(kModule, "the construction needs p = 3 mod 4");
    if (p <= 3) throw_domain(kModule, "p must exceed 3 (3 already ramifies in the base tower)");

    // disc of Q(sqrt(p)) for p = 3 mod 4 is 4p; a prior quadratic level of the
    // tower already carries 2^2, so the 2-part cancels in the excess
    ExcessInput input;
    input.norm_DC = 4 * p;
    input.s = 2;
    input.disjoint = false;
    input.family = {{2, Int(4)}};
    ExcessValue excess = excess_discriminant(input);
    return prefall_bound(2, 1, Rat(1), excess.value);
}

namespace {

Int trinomial_formula_disc(long b) {
    Int bb, cc;
    mpz_ui_pow_ui(bb.get_mpz_t(), static_cast<unsigned long>(b), static_cast<unsigned long>(b));
    mpz_ui_pow_ui(cc.get_mpz_t(), static_cast<unsigned long>(b - 1),
                  static_cast<unsigned long>(b - 1));
    return bb - cc;
}

bool splits_completely(const IntPoly& f, const Int& ell) {
    // distinct linear factors mod ell <=> f | x^ell - x (ell coprime to disc)
    ModPoly fm = ModPoly::reduce(f, ell);
    if (fm.degree() != f.degree()) return false;
    ModPoly xq = ModPoly::pow_mod(ModPoly::x(ell), ell, fm);
    return xq == ModPoly::x(ell).rem(fm);
}

} // namespace

TowerStep trinomial_step(const std::vector<TowerStep>& prior, long b) {
    if (b < 12 || b % 12 != 0) throw_domain(kModule, "b must be a positive multiple of 12");

    std::vector<Int> fc(static_cast<size_t>(b) + 1, Int(0));
    fc[0] = 1;
    fc[1] = 1;
    fc[static_cast<size_t>(b)] = 1;
    IntPoly f(std::move(fc));

    TowerStep step;
    step.index = static_cast<int>(prior.size()) + 1;
    step.b = b;
    step.disc = poly_discriminant(f);
    step.formula_disc = trinomial_formula_disc(b);
    if (step.disc != step.formula_disc)
        throw_internal(kModule, "trinomial discriminant does not match the closed form");

    for (const auto& ps : prior) {
        Int g;
        Int a1 = abs(step.disc), a2 = abs(Int(ps.disc));
        mpz_gcd(g.get_mpz_t(), a1.get_mpz_t(), a2.get_mpz_t());
        if (g != 1)
            throw_domain(kModule, "b = " + std::to_string(b) +
                                      " shares ramified primes with step " +
                                      std::to_string(ps.index));
    }

    // certified irreducibility (rejection propagates as an error)
    FieldPtr F = NumberField::create(f);

    // height window of a root: 0 < h <= log2/(b-1)
    HeightEstimate h = height(FieldElement::generator(F), 20);
    if (h.is_zero) throw_internal(kModule, "trinomial root is a root of unity?");
    const mpfr_prec_t prec = 192;
    Real upper = log(Real::of(2L, prec)) / Real::of(b - 1, prec);
    if (!(h.value - h.error_bound > Real::of(0L, prec)) || !(h.value - h.error_bound <= upper))
        throw_internal(kModule, "root height left the window (0, log2/(b-1)]");
    step.height_upper = upper.to_string(15);
    step.root_height = h.value.to_string(15);

    // smallest prime splitting completely in every prior step and unramified here
    const long search_bound = 1000000;
    Int ell = 1;
    bool found = false;
    while (!found) {
        mpz_nextprime(ell.get_mpz_t(), ell.get_mpz_t());
        if (ell > search_bound)
            throw_limit(kModule, "no completely split prime found within the search bound");
        if (mpz_divisible_p(step.disc.get_mpz_t(), ell.get_mpz_t())) continue;
        bool ok = true;
        for (const auto& ps : prior) {
            if (mpz_divisible_p(ps.disc.get_mpz_t(), ell.get_mpz_t())) {
                ok = false;
                break;
            }
            std::vector<Int> pc(static_cast<size_t>(ps.b) + 1, Int(0));
            pc[0] = 1;
            pc[1] = 1;
            pc[static_cast<size_t>(ps.b)] = 1;
            if (!splits_completely(IntPoly(std::move(pc)), ell)) {
                ok = false;
                break;
            }
        }
        if (ok) {
            step.split_prime = ell;
            found = true;
        }
    }
    return step;
}

} // namespace bogocert
