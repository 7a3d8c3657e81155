#include "bogocert/modpoly.hpp"

#include "bogocert/config.hpp"
#include "bogocert/errors.hpp"

#include <algorithm>
#include <random>
#include <tuple>

namespace bogocert {

namespace {
const Int kZero = 0;
const char* kModule = "exactmath";

Int mod_inverse(const Int& a, const Int& p) {
    Int inv;
    if (mpz_invert(inv.get_mpz_t(), a.get_mpz_t(), p.get_mpz_t()) == 0)
        throw_internal(kModule, "non-invertible element mod p");
    return inv;
}
} // namespace

ModPoly::ModPoly(Int p, std::vector<Int> coeffs) : p_(std::move(p)), c_(std::move(coeffs)) {
    for (auto& v : c_) {
        mpz_mod(v.get_mpz_t(), v.get_mpz_t(), p_.get_mpz_t());
    }
    normalize();
}

void ModPoly::normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

ModPoly ModPoly::reduce(const IntPoly& f, const Int& p) {
    return ModPoly(p, f.coeffs());
}

const Int& ModPoly::lead() const {
    if (c_.empty()) return kZero;
    return c_.back();
}

const Int& ModPoly::coeff(size_t i) const {
    if (i >= c_.size()) return kZero;
    return c_[i];
}

ModPoly ModPoly::operator+(const ModPoly& o) const {
    std::vector<Int> r(std::max(c_.size(), o.c_.size()), Int(0));
    for (size_t i = 0; i < c_.size(); ++i) r[i] = c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
    return ModPoly(p_, std::move(r));
}

ModPoly ModPoly::operator-(const ModPoly& o) const {
    std::vector<Int> r(std::max(c_.size(), o.c_.size()), Int(0));
    for (size_t i = 0; i < c_.size(); ++i) r[i] = c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r[i] -= o.c_[i];
    return ModPoly(p_, std::move(r));
}

ModPoly ModPoly::operator*(const ModPoly& o) const {
    if (is_zero() || o.is_zero()) return ModPoly(p_);
    std::vector<Int> r(c_.size() + o.c_.size() - 1, Int(0));
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    }
    return ModPoly(p_, std::move(r));
}

ModPoly ModPoly::scaled(const Int& k) const {
    std::vector<Int> r(c_);
    for (auto& v : r) v *= k;
    return ModPoly(p_, std::move(r));
}

ModPoly ModPoly::make_monic() const {
    if (is_zero() || is_monic()) return *this;
    return scaled(mod_inverse(lead(), p_));
}

ModPoly ModPoly::derivative() const {
    if (c_.size() <= 1) return ModPoly(p_);
    std::vector<Int> r(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * Int(static_cast<long>(i));
    return ModPoly(p_, std::move(r));
}

Int ModPoly::eval(const Int& t) const {
    Int acc = 0;
    for (size_t i = c_.size(); i-- > 0;) {
        acc = acc * t + c_[i];
        mpz_mod(acc.get_mpz_t(), acc.get_mpz_t(), p_.get_mpz_t());
    }
    return acc;
}

std::pair<ModPoly, ModPoly> ModPoly::divmod(const ModPoly& divisor) const {
    if (divisor.is_zero()) throw_domain(kModule, "mod-p division by zero polynomial");
    int dr = degree(), db = divisor.degree();
    if (dr < db) return {ModPoly(p_), *this};
    Int inv = mod_inverse(divisor.lead(), p_);
    std::vector<Int> rem(c_);
    std::vector<Int> q(static_cast<size_t>(dr - db) + 1, Int(0));
    for (int i = dr; i >= db; --i) {
        Int t = rem[static_cast<size_t>(i)] * inv;
        mpz_mod(t.get_mpz_t(), t.get_mpz_t(), p_.get_mpz_t());
        if (t == 0) continue;
        q[static_cast<size_t>(i - db)] = t;
        for (int j = 0; j <= db; ++j) {
            Int& slot = rem[static_cast<size_t>(i - db + j)];
            slot -= t * divisor.c_[static_cast<size_t>(j)];
            mpz_mod(slot.get_mpz_t(), slot.get_mpz_t(), p_.get_mpz_t());
        }
    }
    return {ModPoly(p_, std::move(q)), ModPoly(p_, std::move(rem))};
}

ModPoly ModPoly::gcd(ModPoly a, ModPoly b) {
    if (a.p_ != b.p_ && !a.is_zero() && !b.is_zero())
        throw_internal(kModule, "gcd with mismatched moduli");
    while (!b.is_zero()) {
        ModPoly r = a.rem(b);
        a = std::move(b);
        b = std::move(r);
    }
    return a.make_monic();
}

std::tuple<ModPoly, ModPoly, ModPoly> ModPoly::xgcd(const ModPoly& a, const ModPoly& b) {
    const Int& p = a.is_zero() ? b.modulus() : a.modulus();
    ModPoly r0 = a, r1 = b;
    ModPoly s0 = ModPoly::constant(p, 1), s1 = ModPoly(p);
    ModPoly t0 = ModPoly(p), t1 = ModPoly::constant(p, 1);
    while (!r1.is_zero()) {
        auto [q, r2] = r0.divmod(r1);
        ModPoly s2 = s0 - q * s1;
        ModPoly t2 = t0 - q * t1;
        r0 = std::move(r1); r1 = std::move(r2);
        s0 = std::move(s1); s1 = std::move(s2);
        t0 = std::move(t1); t1 = std::move(t2);
    }
    if (r0.is_zero()) return {r0, s0, t0};
    Int inv = mod_inverse(r0.lead(), p);
    return {r0.scaled(inv), s0.scaled(inv), t0.scaled(inv)};
}

ModPoly ModPoly::pow_mod(const ModPoly& base, const Int& e, const ModPoly& modulus) {
    if (e < 0) throw_internal(kModule, "negative exponent in pow_mod");
    ModPoly result = ModPoly::constant(base.modulus(), 1);
    ModPoly b = base.rem(modulus);
    Int exp = e;
    while (exp > 0) {
        if (mpz_odd_p(exp.get_mpz_t())) result = (result * b).rem(modulus);
        b = (b * b).rem(modulus);
        exp >>= 1;
    }
    return result;
}

IntPoly ModPoly::lift() const {
    return IntPoly(c_);
}

bool ModPoly::less(const ModPoly& a, const ModPoly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (size_t i = 0; i < a.c_.size(); ++i) {
        int c = cmp(a.c_[i], b.c_[i]);
        if (c != 0) return c < 0;
    }
    return false;
}

namespace {

// f monic squarefree decomposition in characteristic p:
// returns pairwise-coprime squarefree (g, multiplicity) with f = prod g^m.
void squarefree_decompose(const ModPoly& f, int outer_mult,
                          std::vector<std::pair<ModPoly, int>>& out) {
    const Int& p = f.modulus();
    if (f.degree() <= 0) return;
    ModPoly df = f.derivative();
    if (df.is_zero()) {
        // f = g(x^p); coefficients are already p-th roots in the prime field
        unsigned long pl = mpz_get_ui(p.get_mpz_t());
        std::vector<Int> g;
        for (size_t i = 0; i <= static_cast<size_t>(f.degree()); i += pl)
            g.push_back(f.coeff(i));
        squarefree_decompose(ModPoly(p, std::move(g)), outer_mult * static_cast<int>(pl), out);
        return;
    }
    ModPoly c = ModPoly::gcd(f, df);
    ModPoly w = f.divmod(c).first.make_monic();
    int i = 1;
    while (w.degree() > 0) {
        ModPoly y = ModPoly::gcd(w, c);
        ModPoly z = w.divmod(y).first.make_monic();
        if (z.degree() > 0) out.emplace_back(z, outer_mult * i);
        w = std::move(y);
        c = c.divmod(w).first.make_monic();
        ++i;
    }
    if (c.degree() > 0) {
        unsigned long pl = mpz_get_ui(p.get_mpz_t());
        std::vector<Int> g;
        for (size_t j = 0; j <= static_cast<size_t>(c.degree()); j += pl)
            g.push_back(c.coeff(j));
        squarefree_decompose(ModPoly(p, std::move(g)), outer_mult * static_cast<int>(pl), out);
    }
}

// distinct-degree: splits monic squarefree u into (product of irreducibles of degree d, d)
std::vector<std::pair<ModPoly, int>> distinct_degree(const ModPoly& u0) {
    const Int& p = u0.modulus();
    std::vector<std::pair<ModPoly, int>> out;
    ModPoly u = u0;
    ModPoly xq = ModPoly::x(p).rem(u); // x^(p^0) = x
    int d = 0;
    while (u.degree() > 0) {
        ++d;
        if (2 * d > u.degree()) {
            out.emplace_back(u, u.degree());
            break;
        }
        xq = ModPoly::pow_mod(xq, p, u);
        ModPoly g = ModPoly::gcd(xq - ModPoly::x(p), u);
        if (g.degree() > 0) {
            out.emplace_back(g, d);
            u = u.divmod(g).first.make_monic();
            xq = xq.rem(u);
        }
    }
    return out;
}

Int pow_int(const Int& b, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
    return r;
}

ModPoly random_poly(const Int& p, int max_deg, std::mt19937_64& rng) {
    std::vector<Int> c(static_cast<size_t>(max_deg) + 1);
    for (auto& v : c) {
        Int r = 0;
        // assemble a uniform-ish value below p from 32-bit chunks
        size_t bits = mpz_sizeinbase(p.get_mpz_t(), 2) + 16;
        for (size_t produced = 0; produced < bits; produced += 32) {
            r = (r << 32) + Int(static_cast<unsigned long>(rng() & 0xffffffffULL));
        }
        mpz_mod(v.get_mpz_t(), r.get_mpz_t(), p.get_mpz_t());
    }
    return ModPoly(p, std::move(c));
}

// equal-degree splitting (Cantor-Zassenhaus), u = product of irreducibles of degree d
void equal_degree(const ModPoly& u, int d, std::mt19937_64& rng, std::vector<ModPoly>& out) {
    const Int& p = u.modulus();
    if (u.degree() == d) {
        out.push_back(u.make_monic());
        return;
    }
    ModPoly splitter(p);
    while (true) {
        ModPoly h = random_poly(p, u.degree() - 1, rng);
        if (h.degree() < 1) continue;
        ModPoly g;
        if (p == 2) {
            // trace map: h + h^2 + h^4 + ... (d terms)
            ModPoly t = h.rem(u), acc = t;
            for (int i = 1; i < d; ++i) {
                t = (t * t).rem(u);
                acc = acc + t;
            }
            g = ModPoly::gcd(acc, u);
        } else {
            Int e = (pow_int(p, static_cast<unsigned long>(d)) - 1) / 2;
            ModPoly t = ModPoly::pow_mod(h, e, u);
            g = ModPoly::gcd(t - ModPoly::constant(p, 1), u);
        }
        if (g.degree() > 0 && g.degree() < u.degree()) {
            splitter = g;
            break;
        }
    }
    equal_degree(splitter, d, rng, out);
    equal_degree(u.divmod(splitter).first.make_monic(), d, rng, out);
}

} // namespace

ModPFactorization factor_mod_p(const IntPoly& f, const Int& p) {
    if (p < 2 || mpz_probab_prime_p(p.get_mpz_t(), 30) == 0)
        throw_domain(kModule, "modulus " + p.get_str() + " is not prime");
    ModPoly fp = ModPoly::reduce(f, p);
    if (fp.is_zero()) throw_domain(kModule, "polynomial vanishes mod " + p.get_str());

    ModPFactorization result;
    result.p = p;
    result.unit = fp.lead();
    if (fp.degree() == 0) return result;

    std::mt19937_64 rng(global_seed());
    std::vector<std::pair<ModPoly, int>> sqf;
    squarefree_decompose(fp.make_monic(), 1, sqf);

    for (const auto& [part, mult] : sqf) {
        for (const auto& [prod, d] : distinct_degree(part)) {
            std::vector<ModPoly> irr;
            equal_degree(prod, d, rng, irr);
            for (auto& g : irr) result.factors.push_back({std::move(g), mult});
        }
    }
    std::sort(result.factors.begin(), result.factors.end(),
              [](const ModPFactor& a, const ModPFactor& b) { return ModPoly::less(a.factor, b.factor); });
    return result;
}

bool irreducible_mod_p(const IntPoly& f, const Int& p) {
    ModPoly fp = ModPoly::reduce(f, p);
    if (fp.degree() < 1) return false;
    auto fac = factor_mod_p(f, p);
    return fac.factors.size() == 1 && fac.factors[0].multiplicity == 1 &&
           fac.factors[0].factor.degree() == fp.degree();
}

} // namespace bogocert
