#include "bogocert/hensel.hpp"

#include "bogocert/errors.hpp"
#include "bogocert/modpoly.hpp"

namespace bogocert {

namespace {
const char* kModule = "exactmath";

IntPoly mul_mod(const IntPoly& a, const IntPoly& b, const Int& m) {
    return poly_mod(a * b, m);
}

// division by a monic divisor with coefficients mod m: {q, r}
std::pair<IntPoly, IntPoly> divmod_monic_mod(const IntPoly& a, const IntPoly& h, const Int& m) {
    auto [q, r] = poly_mod(a, m).divmod_monic(h);
    return {poly_mod(q, m), poly_mod(r, m)};
}

struct HenselPair {
    IntPoly g, h, s, t; // f = g*h mod m, s*g + t*h = 1 mod m, both monic
};

// one quadratic step: from modulus m to m^2 (then callers clamp to the target)
HenselPair hensel_step(const IntPoly& f, const HenselPair& in, const Int& m) {
    Int m2 = m * m;
    IntPoly e = poly_mod(f - in.g * in.h, m2);
    auto [q, r] = divmod_monic_mod(in.s * e, in.h, m2);
    IntPoly g2 = poly_mod(in.g + in.t * e + q * in.g, m2);
    IntPoly h2 = poly_mod(in.h + r, m2);
    IntPoly b = poly_mod(in.s * g2 + in.t * h2 - IntPoly::one(), m2);
    auto [c, d] = divmod_monic_mod(in.s * b, h2, m2);
    IntPoly s2 = poly_mod(in.s - d, m2);
    IntPoly t2 = poly_mod(in.t - in.t * b - c * g2, m2);
    if (!g2.is_monic() || !h2.is_monic())
        throw_internal(kModule, "hensel step lost monicity");
    return {std::move(g2), std::move(h2), std::move(s2), std::move(t2)};
}

// lift f = g*h from mod ell to mod ell^k (g, h monic, coprime mod ell)
HenselPair lift_pair(const IntPoly& f, const IntPoly& g1, const IntPoly& h1, const Int& ell,
                     unsigned k) {
    auto [gg, s0m, t0m] = ModPoly::xgcd(ModPoly::reduce(g1, ell), ModPoly::reduce(h1, ell));
    if (gg.degree() != 0)
        throw_domain(kModule, "non-coprime blocks mod " + ell.get_str());
    // normalize deg s < deg h, recompute t exactly
    ModPoly s0 = s0m.rem(ModPoly::reduce(h1, ell));
    ModPoly num = ModPoly::constant(ell, 1) - s0 * ModPoly::reduce(g1, ell);
    auto [t0, rem0] = num.divmod(ModPoly::reduce(h1, ell));
    if (!rem0.is_zero()) throw_internal(kModule, "bezout normalization failed");

    HenselPair cur{poly_mod(g1, ell), poly_mod(h1, ell), s0.lift(), t0.lift()};
    Int m = ell;
    Int target = int_pow(ell, k);
    while (m < target) {
        cur = hensel_step(f, cur, m);
        m = m * m;
    }
    cur.g = poly_mod(cur.g, target);
    cur.h = poly_mod(cur.h, target);
    return cur;
}

} // namespace

Int int_pow(const Int& ell, unsigned k) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), ell.get_mpz_t(), k);
    return r;
}

IntPoly poly_mod(const IntPoly& f, const Int& m) {
    std::vector<Int> c(f.coeffs());
    for (auto& v : c) mpz_mod(v.get_mpz_t(), v.get_mpz_t(), m.get_mpz_t());
    return IntPoly(std::move(c));
}

std::vector<IntPoly> hensel_lift_blocks(const IntPoly& f, const std::vector<IntPoly>& blocks,
                                        const Int& ell, unsigned k) {
    if (k == 0) throw_domain(kModule, "precision exponent must be >= 1");
    if (!f.is_monic()) throw_domain(kModule, "lifting requires a monic polynomial");
    if (blocks.empty()) throw_domain(kModule, "no factor blocks given");

    // validate the stated preconditions mod ell
    int total_deg = 0;
    IntPoly prod = IntPoly::one();
    for (const auto& b : blocks) {
        ModPoly bm = ModPoly::reduce(b, ell);
        if (bm.degree() < 1 || !bm.is_monic())
            throw_domain(kModule, "blocks must be monic of degree >= 1 mod " + ell.get_str());
        total_deg += bm.degree();
        prod = poly_mod(prod * bm.lift(), ell);
    }
    if (total_deg != f.degree() || poly_mod(f, ell) != prod)
        throw_domain(kModule, "block product does not match the polynomial mod " + ell.get_str());
    for (size_t i = 0; i < blocks.size(); ++i)
        for (size_t j = i + 1; j < blocks.size(); ++j) {
            ModPoly g = ModPoly::gcd(ModPoly::reduce(blocks[i], ell), ModPoly::reduce(blocks[j], ell));
            if (g.degree() != 0) throw_domain(kModule, "non-coprime blocks");
        }

    Int target = int_pow(ell, k);
    if (blocks.size() == 1) return {poly_mod(f, target)};
    if (k == 1) {
        std::vector<IntPoly> out;
        out.reserve(blocks.size());
        for (const auto& b : blocks) out.push_back(poly_mod(b, ell));
        return out;
    }

    std::vector<IntPoly> out;
    out.reserve(blocks.size());
    IntPoly rest_f = poly_mod(f, target);
    for (size_t i = 0; i + 1 < blocks.size(); ++i) {
        IntPoly g1 = poly_mod(blocks[i], ell);
        IntPoly h1 = IntPoly::one();
        for (size_t j = i + 1; j < blocks.size(); ++j) h1 = poly_mod(h1 * poly_mod(blocks[j], ell), ell);
        HenselPair lifted = lift_pair(rest_f, g1, h1, ell, k);
        out.push_back(lifted.g);
        rest_f = lifted.h;
    }
    out.push_back(rest_f);
    return out;
}

} // namespace bogocert
