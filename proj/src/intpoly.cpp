#include "bogocert/intpoly.hpp"

#include "bogocert/errors.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace bogocert {

namespace {
const Int kZero = 0;
const char* kModule = "exactmath";
} // namespace

IntPoly IntPoly::binomial(unsigned n, const Int& a) {
    std::vector<Int> c(n + 1, Int(0));
    c[0] = -a;
    c[n] = 1;
    return IntPoly(std::move(c));
}

IntPoly IntPoly::monomial(const Int& c, unsigned n) {
    std::vector<Int> v(n + 1, Int(0));
    v[n] = c;
    return IntPoly(std::move(v));
}

const Int& IntPoly::lead() const {
    if (c_.empty()) return kZero;
    return c_.back();
}

const Int& IntPoly::coeff(size_t i) const {
    if (i >= c_.size()) return kZero;
    return c_[i];
}

IntPoly IntPoly::operator+(const IntPoly& o) const {
    std::vector<Int> r(std::max(c_.size(), o.c_.size()), Int(0));
    for (size_t i = 0; i < c_.size(); ++i) r[i] = c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
    return IntPoly(std::move(r));
}

IntPoly IntPoly::operator-(const IntPoly& o) const {
    std::vector<Int> r(std::max(c_.size(), o.c_.size()), Int(0));
    for (size_t i = 0; i < c_.size(); ++i) r[i] = c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r[i] -= o.c_[i];
    return IntPoly(std::move(r));
}

IntPoly IntPoly::operator-() const {
    std::vector<Int> r(c_);
    for (auto& v : r) v = -v;
    return IntPoly(std::move(r));
}

IntPoly IntPoly::operator*(const IntPoly& o) const {
    if (is_zero() || o.is_zero()) return IntPoly();
    std::vector<Int> r(c_.size() + o.c_.size() - 1, Int(0));
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    }
    return IntPoly(std::move(r));
}

IntPoly IntPoly::operator*(const Int& k) const {
    if (k == 0) return IntPoly();
    std::vector<Int> r(c_);
    for (auto& v : r) v *= k;
    return IntPoly(std::move(r));
}

IntPoly IntPoly::derivative() const {
    if (c_.size() <= 1) return IntPoly();
    std::vector<Int> r(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * Int(static_cast<long>(i));
    return IntPoly(std::move(r));
}

Int IntPoly::eval(const Int& t) const {
    Int acc = 0;
    for (size_t i = c_.size(); i-- > 0;) acc = acc * t + c_[i];
    return acc;
}

Rat IntPoly::eval(const Rat& t) const {
    Rat acc = 0;
    for (size_t i = c_.size(); i-- > 0;) acc = acc * t + Rat(c_[i]);
    return acc;
}

Int IntPoly::content() const {
    Int g = 0;
    for (const auto& v : c_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

IntPoly IntPoly::primitive_part() const {
    if (is_zero()) return IntPoly();
    Int g = content();
    if (lead() < 0) g = -g;
    std::vector<Int> r(c_);
    for (auto& v : r) v /= g;
    return IntPoly(std::move(r));
}

IntPoly IntPoly::divide_exact(const Int& k) const {
    if (k == 0) throw_domain(kModule, "division by zero");
    std::vector<Int> r(c_);
    for (auto& v : r) {
        Int q, rem;
        mpz_tdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), v.get_mpz_t(), k.get_mpz_t());
        if (rem != 0) throw_internal(kModule, "inexact scalar polynomial division");
        v = q;
    }
    return IntPoly(std::move(r));
}

IntPoly IntPoly::divide_exact(const IntPoly& divisor) const {
    if (divisor.is_zero()) throw_domain(kModule, "division by zero polynomial");
    if (is_zero()) return IntPoly();
    std::vector<Int> rem(c_);
    int dr = degree(), db = divisor.degree();
    if (dr < db) throw_internal(kModule, "inexact polynomial division (degree)");
    std::vector<Int> q(static_cast<size_t>(dr - db) + 1, Int(0));
    const Int& lb = divisor.lead();
    for (int i = dr; i >= db; --i) {
        Int& top = rem[static_cast<size_t>(i)];
        if (top == 0) continue;
        Int qc, r2;
        mpz_tdiv_qr(qc.get_mpz_t(), r2.get_mpz_t(), top.get_mpz_t(), lb.get_mpz_t());
        if (r2 != 0) throw_internal(kModule, "inexact polynomial division");
        q[static_cast<size_t>(i - db)] = qc;
        for (int j = 0; j <= db; ++j)
            rem[static_cast<size_t>(i - db + j)] -= qc * divisor.c_[static_cast<size_t>(j)];
    }
    for (const auto& v : rem)
        if (v != 0) throw_internal(kModule, "inexact polynomial division (remainder)");
    return IntPoly(std::move(q));
}

std::pair<IntPoly, IntPoly> IntPoly::divmod_monic(const IntPoly& divisor) const {
    if (!divisor.is_monic()) throw_internal(kModule, "divmod_monic requires monic divisor");
    std::vector<Int> rem(c_);
    int dr = degree(), db = divisor.degree();
    if (dr < db) return {IntPoly(), *this};
    std::vector<Int> q(static_cast<size_t>(dr - db) + 1, Int(0));
    for (int i = dr; i >= db; --i) {
        Int qc = rem[static_cast<size_t>(i)];
        if (qc == 0) continue;
        q[static_cast<size_t>(i - db)] = qc;
        for (int j = 0; j <= db; ++j)
            rem[static_cast<size_t>(i - db + j)] -= qc * divisor.c_[static_cast<size_t>(j)];
    }
    return {IntPoly(std::move(q)), IntPoly(std::move(rem))};
}

IntPoly IntPoly::pseudo_rem(const IntPoly& a, const IntPoly& b) {
    if (b.is_zero()) throw_domain(kModule, "pseudo-remainder by zero");
    int da = a.degree(), db = b.degree();
    if (da < db) return a;
    std::vector<Int> rem(a.c_);
    const Int& lb = b.lead();
    for (int i = da; i >= db; --i) {
        // multiply the running remainder by lb so every elimination is integral
        Int top = rem[static_cast<size_t>(i)];
        for (int j = 0; j <= i; ++j) rem[static_cast<size_t>(j)] *= lb;
        for (int j = 0; j <= db; ++j)
            rem[static_cast<size_t>(i - db + j)] -= top * b.c_[static_cast<size_t>(j)];
        rem[static_cast<size_t>(i)] = 0;
    }
    rem.resize(static_cast<size_t>(db));
    // the whole remainder was scaled by lb once per step, so this is exactly
    // lb^(da-db+1) * a mod b
    return IntPoly(std::move(rem));
}

IntPoly poly_gcd(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() && b.is_zero()) return IntPoly();
    if (a.is_zero()) return b.primitive_part();
    if (b.is_zero()) return a.primitive_part();
    Int ca = a.content(), cb = b.content();
    Int cg;
    mpz_gcd(cg.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
    IntPoly A = a.primitive_part(), B = b.primitive_part();
    if (A.degree() < B.degree()) std::swap(A, B);
    while (!B.is_zero()) {
        IntPoly R = IntPoly::pseudo_rem(A, B).primitive_part();
        A = std::move(B);
        B = std::move(R);
    }
    IntPoly g = A.primitive_part();
    return g * cg;
}

namespace {
// multiply acc by base^e for a (possibly negative) exponent
void acc_mul_pow(Rat& acc, const Int& base, long e) {
    if (e == 0) return;
    Int p;
    mpz_pow_ui(p.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(e < 0 ? -e : e));
    if (e > 0)
        acc *= Rat(p);
    else
        acc /= Rat(p);
}
} // namespace

Int resultant(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() && b.is_zero()) throw_domain(kModule, "resultant of two zero polynomials");
    if (a.is_zero() || b.is_zero()) return 0;
    int da = a.degree(), db = b.degree();
    if (da == 0) {
        Int r;
        mpz_pow_ui(r.get_mpz_t(), a.lead().get_mpz_t(), static_cast<unsigned long>(db));
        return r;
    }
    if (db == 0) {
        Int r;
        mpz_pow_ui(r.get_mpz_t(), b.lead().get_mpz_t(), static_cast<unsigned long>(da));
        return r;
    }
    // invariant: Res(a, b) = acc * Res(A, B), with acc an exact rational built
    // from the pseudo-division identities
    //   Res(A, B) = (-1)^(mn) c^(m - r - (delta+1)n) (g h^delta)^n Res(B, B'),
    // where c = lc(B), R = prem(A, B), r = deg R, B' = R / (g h^delta).
    Rat acc(1);
    IntPoly A = a, B = b;
    if (da < db) {
        std::swap(A, B);
        if ((da & 1) && (db & 1)) acc = -acc;
    }
    {
        // contents: Res(ca A', cb B') = ca^degB cb^degA Res(A', B')
        Int ca = A.content(), cb = B.content();
        if (A.lead() < 0) ca = -ca; // keep primitive parts sign-faithful
        if (B.lead() < 0) cb = -cb;
        A = A.divide_exact(ca);
        B = B.divide_exact(cb);
        acc_mul_pow(acc, ca, B.degree());
        acc_mul_pow(acc, cb, A.degree());
    }
    Int g = 1, h = 1;
    while (true) {
        long m = A.degree(), n = B.degree();
        long delta = m - n;
        Int c = B.lead();
        IntPoly R = IntPoly::pseudo_rem(A, B);
        if (R.is_zero()) return 0; // common factor
        long r = R.degree();
        if ((m & 1) && (n & 1)) acc = -acc;
        acc_mul_pow(acc, c, m - r - (delta + 1) * n);
        Int hd;
        mpz_pow_ui(hd.get_mpz_t(), h.get_mpz_t(), static_cast<unsigned long>(delta));
        Int divisor = g * hd;
        acc_mul_pow(acc, divisor, n);
        A = B;
        B = R.divide_exact(divisor);
        g = A.lead();
        if (delta > 0) {
            // h <- g^delta / h^(delta-1), exact by subresultant theory
            Int gd, hprev;
            mpz_pow_ui(gd.get_mpz_t(), g.get_mpz_t(), static_cast<unsigned long>(delta));
            mpz_pow_ui(hprev.get_mpz_t(), h.get_mpz_t(), static_cast<unsigned long>(delta - 1));
            Int q, r2;
            mpz_tdiv_qr(q.get_mpz_t(), r2.get_mpz_t(), gd.get_mpz_t(), hprev.get_mpz_t());
            if (r2 != 0) throw_internal(kModule, "subresultant h-update not exact");
            h = q;
        }
        if (B.degree() == 0) {
            acc_mul_pow(acc, B.lead(), A.degree());
            acc.canonicalize();
            if (acc.get_den() != 1) throw_internal(kModule, "resultant accumulator not integral");
            return acc.get_num();
        }
    }
}

Int poly_discriminant(const IntPoly& f) {
    int d = f.degree();
    if (d < 2) throw_domain(kModule, "discriminant requires degree >= 2");
    Int r = resultant(f, f.derivative());
    Int q, rem;
    mpz_tdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), r.get_mpz_t(), f.lead().get_mpz_t());
    if (rem != 0) throw_internal(kModule, "lead does not divide Res(f, f')");
    long e = static_cast<long>(d) * (d - 1) / 2;
    if (e & 1) q = -q;
    return q;
}

IntPoly squarefree_part(const IntPoly& f) {
    if (f.is_zero()) throw_domain(kModule, "squarefree part of zero polynomial");
    if (f.degree() == 0) return IntPoly::one();
    IntPoly g = poly_gcd(f, f.derivative());
    IntPoly q = f.primitive_part().divide_exact(g.primitive_part());
    return q.primitive_part();
}

namespace {

int sign_of(const Int& v) { return mpz_sgn(v.get_mpz_t()); }

// Sturm chain with positive-constant normalization preserved.
std::vector<IntPoly> sturm_chain(const IntPoly& f) {
    std::vector<IntPoly> chain;
    chain.push_back(f.primitive_part());
    IntPoly d = f.derivative();
    if (d.is_zero()) return chain;
    chain.push_back(d.primitive_part());
    while (true) {
        const IntPoly& a = chain[chain.size() - 2];
        const IntPoly& b = chain.back();
        if (b.degree() < 0) break;
        IntPoly prem = IntPoly::pseudo_rem(a, b);
        if (prem.is_zero()) break;
        // prem = lc(b)^(delta+1) * rem(a, b); the Sturm successor is -rem up to a
        // positive constant, so flip depending on the sign of the multiplier.
        Int lb = b.lead();
        int delta = a.degree() - b.degree();
        bool mult_negative = (sign_of(lb) < 0) && ((delta + 1) & 1);
        IntPoly next = mult_negative ? prem : -prem;
        next = next.divide_exact(next.content());
        chain.push_back(std::move(next));
        if (chain.back().degree() == 0) break;
    }
    return chain;
}

int sign_at_infinity(const IntPoly& p, bool positive) {
    if (p.is_zero()) return 0;
    int s = sign_of(p.lead());
    if (!positive && (p.degree() & 1)) s = -s;
    return s;
}

int variations(const std::vector<int>& signs) {
    int v = 0, last = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (last != 0 && s != last) ++v;
        last = s;
    }
    return v;
}

} // namespace

int count_real_roots(const IntPoly& f) {
    if (f.is_zero()) throw_domain(kModule, "real-root count of zero polynomial");
    IntPoly sf = squarefree_part(f);
    if (sf.degree() <= 0) return 0;
    auto chain = sturm_chain(sf);
    std::vector<int> at_pos, at_neg;
    at_pos.reserve(chain.size());
    at_neg.reserve(chain.size());
    for (const auto& p : chain) {
        at_pos.push_back(sign_at_infinity(p, true));
        at_neg.push_back(sign_at_infinity(p, false));
    }
    return variations(at_neg) - variations(at_pos);
}

IntPoly compose_affine(const IntPoly& f, const Rat& u, const Rat& w) {
    if (w == 0) throw_domain(kModule, "affine root transform requires w != 0");
    if (f.is_zero()) return IntPoly();
    int m = f.degree();
    // g(x) = w^m * f((x - u)/w) has roots u + w*z. Horner over Q[x].
    std::vector<Rat> acc{Rat(f.coeff(static_cast<size_t>(m)))};
    Rat wpow = 1;
    for (int j = m - 1; j >= 0; --j) {
        // acc <- acc*(x-u) + a_j * w^(m-j)
        std::vector<Rat> next(acc.size() + 1, Rat(0));
        for (size_t i = 0; i < acc.size(); ++i) {
            next[i + 1] += acc[i];
            next[i] -= acc[i] * u;
        }
        wpow *= w;
        next[0] += Rat(f.coeff(static_cast<size_t>(j))) * wpow;
        acc = std::move(next);
    }
    Int den = 1;
    for (const auto& q : acc) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den().get_mpz_t());
    std::vector<Int> ic(acc.size());
    for (size_t i = 0; i < acc.size(); ++i) {
        Rat v = acc[i] * Rat(den);
        ic[i] = v.get_num();
    }
    return IntPoly(std::move(ic)).primitive_part();
}

std::string IntPoly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = c_.size(); i-- > 0;) {
        const Int& a = c_[i];
        if (a == 0) continue;
        Int mag = abs(a);
        if (first) {
            if (a < 0) os << "-";
            first = false;
        } else {
            os << (a < 0 ? " - " : " + ");
        }
        if (i == 0 || mag != 1) os << mag.get_str();
        if (i > 0) {
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

IntPoly IntPoly::parse(const std::string& text) {
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
    if (s.empty()) throw_parse(kModule, "empty polynomial");
    std::vector<Int> coeffs;
    size_t i = 0;
    auto ensure = [&](size_t deg) {
        if (coeffs.size() <= deg) coeffs.resize(deg + 1, Int(0));
    };
    while (i < s.size()) {
        int sign = 1;
        if (s[i] == '+' || s[i] == '-') {
            if (s[i] == '-') sign = -1;
            ++i;
        }
        if (i >= s.size()) throw_parse(kModule, "dangling sign in '" + text + "'");
        std::string digits;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) digits.push_back(s[i++]);
        bool has_var = false;
        size_t deg = 0;
        if (i < s.size() && (s[i] == 'x' || s[i] == 'X')) {
            has_var = true;
            ++i;
            if (i < s.size() && s[i] == '*') ++i; // tolerate x*... no-op
            if (i < s.size() && s[i] == '^') {
                ++i;
                std::string ed;
                while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ed.push_back(s[i++]);
                if (ed.empty()) throw_parse(kModule, "missing exponent in '" + text + "'");
                deg = std::stoul(ed);
            } else {
                deg = 1;
            }
        }
        if (!has_var && digits.empty()) throw_parse(kModule, "unexpected character in '" + text + "'");
        Int c = digits.empty() ? Int(1) : Int(digits);
        if (sign < 0) c = -c;
        ensure(deg);
        coeffs[deg] += c;
        if (i < s.size() && s[i] == '*') ++i;
    }
    return IntPoly(std::move(coeffs));
}

std::vector<std::string> IntPoly::serialize() const {
    std::vector<std::string> out;
    out.reserve(c_.size());
    for (const auto& v : c_) out.push_back(v.get_str());
    return out;
}

IntPoly IntPoly::deserialize(const std::vector<std::string>& coeffs) {
    std::vector<Int> v;
    v.reserve(coeffs.size());
    for (const auto& s : coeffs) v.emplace_back(s);
    return IntPoly(std::move(v));
}

} // namespace bogocert
