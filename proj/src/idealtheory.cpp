#include "bogocert/idealtheory.hpp"

#include "bogocert/errors.hpp"
#include "bogocert/hensel.hpp"
#include "bogocert/modpoly.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace bogocert {

namespace {
const char* kModule = "idealtheory";
constexpr unsigned kLiftCap = 4096;

// beta = c(theta)/m with integer c and positive m
std::pair<IntPoly, Int> clear_denominators(const FieldElement& beta) {
    Int m = 1;
    for (const auto& q : beta.coords()) mpz_lcm(m.get_mpz_t(), m.get_mpz_t(), q.get_den().get_mpz_t());
    std::vector<Int> ic(beta.coords().size());
    for (size_t i = 0; i < beta.coords().size(); ++i) {
        Rat v = beta.coords()[i] * Rat(m);
        ic[i] = v.get_num();
    }
    return {IntPoly(std::move(ic)), m};
}

unsigned long remove_factor(Int& value, const Int& p) {
    Int out;
    unsigned long n = mpz_remove(out.get_mpz_t(), value.get_mpz_t(), p.get_mpz_t());
    value = out;
    return n;
}

} // namespace

bool dedekind_check(const FieldPtr& field, const Int& ell) {
    const IntPoly& f = field->minpoly();
    auto fac = factor_mod_p(f, ell);
    IntPoly g_star = IntPoly::one(), h_star = IntPoly::one();
    for (const auto& part : fac.factors) {
        IntPoly lift = part.factor.lift();
        g_star = poly_mod(g_star * lift, ell);
        for (int i = 1; i < part.multiplicity; ++i) h_star = poly_mod(h_star * lift, ell);
    }
    // monic canonical lifts; T = (g*h - f)/ell
    IntPoly product = g_star * h_star;
    IntPoly diff = product - f;
    std::vector<Int> t(diff.coeffs());
    for (auto& v : t) {
        Int q, r;
        mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), v.get_mpz_t(), ell.get_mpz_t());
        if (r != 0) throw_internal(kModule, "dedekind T not integral");
        v = q;
    }
    ModPoly T(ell, std::move(t));
    ModPoly g1 = ModPoly::gcd(ModPoly::reduce(g_star, ell), ModPoly::reduce(h_star, ell));
    ModPoly g2 = ModPoly::gcd(T, g1);
    return g2.degree() == 0;
}

SplittingReport split_prime(const FieldPtr& field, const Int& ell, unsigned k) {
    if (ell < 2 || mpz_probab_prime_p(ell.get_mpz_t(), 30) == 0)
        throw_domain(kModule, "ell = " + ell.get_str() + " is not prime");
    SplittingReport report;
    report.field = field;
    report.ell = ell;
    report.dedekind_ok = dedekind_check(field, ell);
    if (!report.dedekind_ok)
        throw_domain(kModule, "NotMaximalOrder at ell = " + ell.get_str() +
                                  ": the power basis is not maximal here; supply a different generator");

    auto fac = factor_mod_p(field->minpoly(), ell);
    std::vector<IntPoly> blocks;
    blocks.reserve(fac.factors.size());
    for (const auto& part : fac.factors) {
        IntPoly block = IntPoly::one();
        IntPoly lift = part.factor.lift();
        for (int i = 0; i < part.multiplicity; ++i) block = poly_mod(block * lift, ell);
        blocks.push_back(std::move(block));
    }
    std::vector<IntPoly> lifted = hensel_lift_blocks(field->minpoly(), blocks, ell, k);

    int total = 0;
    for (size_t i = 0; i < fac.factors.size(); ++i) {
        PrimeFactor P;
        P.field = field;
        P.ell = ell;
        P.residue_factor = fac.factors[i].factor.lift();
        P.e = fac.factors[i].multiplicity;
        P.f = fac.factors[i].factor.degree();
        P.local_block = lifted[i];
        P.k = k;
        total += P.e * P.f;
        report.factors.push_back(std::move(P));
    }
    if (total != field->degree()) throw_internal(kModule, "sum e*f != degree");
    return report;
}

PrimeFactor relift(const PrimeFactor& P, unsigned k) {
    if (k <= P.k) return P;
    SplittingReport report = split_prime(P.field, P.ell, k);
    for (auto& Q : report.factors)
        if (Q.residue_factor == P.residue_factor) return Q;
    throw_internal(kModule, "relift lost track of the prime");
}

namespace {

// v_P(c(theta)) for a nonzero integer polynomial c, with precision raising
int valuation_integer_poly(const IntPoly& c, const PrimeFactor& P0) {
    PrimeFactor P = P0;
    unsigned k = P.k ? P.k : 32;
    while (true) {
        P = relift(P, k);
        IntPoly r = c.divmod_monic(P.local_block).second;
        if (!r.is_zero()) {
            Int res = resultant(P.local_block, r);
            if (res != 0) {
                unsigned long v = remove_factor(res, P.ell);
                if (v + 2 <= k) {
                    if (v % static_cast<unsigned long>(P.f) != 0)
                        throw_internal(kModule, "local norm valuation not divisible by f");
                    return static_cast<int>(v / static_cast<unsigned long>(P.f));
                }
            }
        }
        if (k >= kLiftCap)
            throw_limit(kModule, "valuation did not stabilize below the lift precision cap");
        k *= 2;
    }
}

} // namespace

int valuation(const FieldElement& beta, const PrimeFactor& P) {
    if (beta.is_zero()) throw_domain(kModule, "valuation of zero (infinite)");
    if (beta.field()->minpoly() != P.field->minpoly())
        throw_domain(kModule, "element and prime belong to different fields");
    auto [c, m] = clear_denominators(beta);
    int v = valuation_integer_poly(c, P);
    if (m != 1) {
        Int mm = m;
        unsigned long vm = remove_factor(mm, P.ell);
        v -= static_cast<int>(vm) * P.e;
    }
    return v;
}

FieldElement uniformizer(const PrimeFactor& P) {
    const FieldPtr& F = P.field;
    int d = F->degree();
    long attempts = static_cast<long>(d) * d + 2;
    for (long j = 0; j <= attempts; ++j) {
        IntPoly cand = P.residue_factor + IntPoly::monomial(P.ell * Int(j), 0);
        // as an element: reduce mod the minimal polynomial
        std::vector<Rat> coords(static_cast<size_t>(d), Rat(0));
        IntPoly reduced = cand.divmod_monic(F->minpoly()).second;
        if (reduced.is_zero()) continue;
        for (size_t i = 0; i <= static_cast<size_t>(reduced.degree()); ++i)
            coords[i] = Rat(reduced.coeff(i));
        FieldElement pi(F, std::move(coords));
        if (valuation(pi, P) == 1) return pi;
    }
    throw_limit(kModule, "uniformizer search exhausted");
}

namespace {

// polynomial arithmetic in Z[x]/(f, m), f monic
IntPoly mulmod_fm(const IntPoly& a, const IntPoly& b, const IntPoly& f, const Int& m) {
    return poly_mod((a * b).divmod_monic(f).second, m);
}

// idempotent for block i: 1 mod (b_i, m_target), 0 mod (b_j, m_target)
IntPoly idempotent(const IntPoly& f, const std::vector<IntPoly>& blocks, size_t i, const Int& ell,
                   const Int& m_target) {
    IntPoly bhat = IntPoly::one();
    for (size_t j = 0; j < blocks.size(); ++j)
        if (j != i) bhat = poly_mod(bhat * blocks[j], ell);
    auto [g, s, t] = ModPoly::xgcd(ModPoly::reduce(bhat, ell), ModPoly::reduce(blocks[i], ell));
    if (g.degree() != 0) throw_internal(kModule, "blocks not coprime in idempotent construction");
    IntPoly e = mulmod_fm(s.lift(), bhat, f, ell);
    // Newton lifting e <- e^2 (3 - 2e)
    Int m = ell;
    while (m < m_target) {
        m = m * m;
        IntPoly e2 = mulmod_fm(e, e, f, m);
        IntPoly three_minus = poly_mod(IntPoly({3}) - e - e, m);
        e = mulmod_fm(e2, three_minus, f, m);
    }
    return poly_mod(e, m_target);
}

} // namespace

FieldElement crt_solve(const std::vector<CrtTarget>& targets) {
    if (targets.empty()) throw_domain(kModule, "no CRT targets");
    const FieldPtr& F = targets[0].P.field;
    const IntPoly& f = F->minpoly();
    int d = F->degree();
    for (const auto& t : targets) {
        if (t.P.field->minpoly() != f) throw_domain(kModule, "targets span different fields");
        if (!t.beta.is_integral_coords()) throw_domain(kModule, "CRT target element must be integral");
        if (t.k < 1) throw_domain(kModule, "congruence depth must be >= 1");
    }
    for (size_t i = 0; i < targets.size(); ++i)
        for (size_t j = i + 1; j < targets.size(); ++j)
            if (targets[i].P.same_prime(targets[j].P))
                throw_domain(kModule, "CRT targets name the same prime twice");

    // group by ell
    std::map<Int, std::vector<const CrtTarget*>> groups;
    for (const auto& t : targets) groups[t.P.ell].push_back(&t);

    std::vector<Int> moduli;
    std::vector<std::vector<Int>> residues; // coefficient vectors mod each modulus
    for (const auto& [ell, group] : groups) {
        unsigned K = 2;
        for (const auto* t : group) K = std::max(K, static_cast<unsigned>(t->k) + 2);
        Int target_mod = int_pow(ell, K);

        auto fac = factor_mod_p(f, ell);
        std::vector<IntPoly> base_blocks;
        base_blocks.reserve(fac.factors.size());
        for (const auto& part : fac.factors) {
            IntPoly block = IntPoly::one();
            IntPoly lift = part.factor.lift();
            for (int i = 0; i < part.multiplicity; ++i) block = poly_mod(block * lift, ell);
            base_blocks.push_back(std::move(block));
        }
        IntPoly acc; // zero
        for (const auto* t : group) {
            // locate this prime's block index
            size_t idx = base_blocks.size();
            for (size_t i = 0; i < fac.factors.size(); ++i)
                if (fac.factors[i].factor.lift() == t->P.residue_factor) idx = i;
            if (idx == base_blocks.size())
                throw_domain(kModule, "target prime does not divide " + ell.get_str() +
                                          " in this field");
            IntPoly e = idempotent(f, base_blocks, idx, ell, target_mod);
            auto [c, m] = clear_denominators(t->beta);
            if (m != 1) throw_internal(kModule, "integral element with denominator");
            acc = poly_mod(acc + mulmod_fm(c, e, f, target_mod), target_mod);
        }
        std::vector<Int> coeffs(static_cast<size_t>(d), Int(0));
        for (size_t i = 0; i <= static_cast<size_t>(std::max(acc.degree(), 0)); ++i)
            if (!acc.is_zero()) coeffs[i] = acc.coeff(i);
        moduli.push_back(target_mod);
        residues.push_back(std::move(coeffs));
    }

    // combine across distinct ell with integer CRT on each coefficient
    Int modulus = moduli[0];
    std::vector<Int> combined = residues[0];
    for (size_t g = 1; g < moduli.size(); ++g) {
        Int m2 = moduli[g];
        Int inv;
        if (mpz_invert(inv.get_mpz_t(), modulus.get_mpz_t(), m2.get_mpz_t()) == 0)
            throw_internal(kModule, "CRT moduli not coprime");
        Int new_mod = modulus * m2;
        for (int i = 0; i < d; ++i) {
            Int a = combined[static_cast<size_t>(i)];
            Int b = residues[g][static_cast<size_t>(i)];
            Int t = ((b - a) * inv) % m2;
            Int x = a + modulus * t;
            mpz_mod(x.get_mpz_t(), x.get_mpz_t(), new_mod.get_mpz_t());
            combined[static_cast<size_t>(i)] = x;
        }
        modulus = new_mod;
    }

    std::vector<Rat> coords(combined.size());
    for (size_t i = 0; i < combined.size(); ++i) coords[i] = Rat(combined[i]);
    FieldElement alpha(F, std::move(coords));

    for (const auto& t : targets) {
        FieldElement diff = alpha - t.beta;
        if (!diff.is_zero() && valuation(diff, t.P) < t.k)
            throw_internal(kModule, "CRT verification failed");
    }
    return alpha;
}

std::string SplittingReport::to_text() const {
    std::ostringstream os;
    os << "ell " << ell.get_str() << "\n";
    os << "dedekind_ok " << (dedekind_ok ? "true" : "false") << "\n";
    for (const auto& P : factors) {
        os << "factor g=[";
        auto s = P.residue_factor.serialize();
        for (size_t i = 0; i < s.size(); ++i) {
            if (i) os << ",";
            os << s[i];
        }
        os << "] e=" << P.e << " f=" << P.f << "\n";
    }
    return os.str();
}

} // namespace bogocert
