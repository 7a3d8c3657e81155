#include "bogocert/numberfield.hpp"

#include "bogocert/errors.hpp"
#include "bogocert/hensel.hpp"
#include "bogocert/modpoly.hpp"

#include <algorithm>
#include <set>

namespace bogocert {

namespace {
const char* kModule = "numberfield";

// ---- small exact rational-polynomial kernel (internal) ----
struct QPoly {
    std::vector<Rat> c; // index = degree

    void trim() {
        while (!c.empty() && c.back() == 0) c.pop_back();
    }
    bool is_zero() const { return c.empty(); }
    int degree() const { return static_cast<int>(c.size()) - 1; }
    static QPoly from(const IntPoly& f) {
        QPoly q;
        q.c.reserve(f.coeffs().size());
        for (const auto& v : f.coeffs()) q.c.emplace_back(v);
        return q;
    }
    QPoly operator*(const QPoly& o) const {
        QPoly r;
        if (is_zero() || o.is_zero()) return r;
        r.c.assign(c.size() + o.c.size() - 1, Rat(0));
        for (size_t i = 0; i < c.size(); ++i)
            for (size_t j = 0; j < o.c.size(); ++j) r.c[i + j] += c[i] * o.c[j];
        r.trim();
        return r;
    }
    QPoly operator-(const QPoly& o) const {
        QPoly r;
        r.c.assign(std::max(c.size(), o.c.size()), Rat(0));
        for (size_t i = 0; i < c.size(); ++i) r.c[i] = c[i];
        for (size_t i = 0; i < o.c.size(); ++i) r.c[i] -= o.c[i];
        r.trim();
        return r;
    }
    std::pair<QPoly, QPoly> divmod(const QPoly& b) const {
        QPoly q, r = *this;
        int db = b.degree();
        if (db < 0) throw_internal(kModule, "rational division by zero polynomial");
        if (r.degree() < db) return {q, r};
        q.c.assign(static_cast<size_t>(r.degree() - db) + 1, Rat(0));
        for (int i = r.degree(); i >= db; --i) {
            Rat t = r.c[static_cast<size_t>(i)] / b.c[static_cast<size_t>(db)];
            if (t == 0) continue;
            q.c[static_cast<size_t>(i - db)] = t;
            for (int j = 0; j <= db; ++j) r.c[static_cast<size_t>(i - db + j)] -= t * b.c[static_cast<size_t>(j)];
        }
        r.trim();
        q.trim();
        return {q, r};
    }
};

// extended gcd over Q[x]; returns {g, s, t} with s*a + t*b = g
std::tuple<QPoly, QPoly, QPoly> qpoly_xgcd(const QPoly& a, const QPoly& b) {
    QPoly r0 = a, r1 = b;
    QPoly s0, s1, t0, t1;
    s0.c = {Rat(1)};
    t1.c = {Rat(1)};
    while (!r1.is_zero()) {
        auto [q, r2] = r0.divmod(r1);
        QPoly s2 = s0 - q * s1;
        QPoly t2 = t0 - q * t1;
        r0 = std::move(r1); r1 = std::move(r2);
        s0 = std::move(s1); s1 = std::move(s2);
        t0 = std::move(t1); t1 = std::move(t2);
    }
    return {r0, s0, t0};
}

std::vector<Int> first_screening_primes(const Int& disc, int count) {
    std::vector<Int> primes;
    Int p = 1;
    while (static_cast<int>(primes.size()) < count) {
        mpz_nextprime(p.get_mpz_t(), p.get_mpz_t());
        if (disc != 0 && mpz_divisible_p(disc.get_mpz_t(), p.get_mpz_t())) continue;
        primes.push_back(p);
    }
    return primes;
}

} // namespace

NumberField::NumberField(IntPoly f, int r, int rp)
    : f_(std::move(f)), degree_(f_.degree()), real_places_(r), complex_pairs_(rp) {}

std::shared_ptr<const NumberField> NumberField::create(const IntPoly& f) {
    if (f.degree() < 1) throw_domain(kModule, "defining polynomial must have degree >= 1");
    if (!f.is_monic()) throw_domain(kModule, "defining polynomial must be monic");
    int d = f.degree();
    if (d == 1) {
        // rational field; signature (1, 0)
        return std::shared_ptr<const NumberField>(new NumberField(f, 1, 0));
    }

    Int disc = poly_discriminant(f);
    if (disc == 0)
        throw_domain(kModule, "reducible: repeated factor (discriminant 0)");

    // cheap certified-reducible screen: integer roots divide the constant term
    {
        Int c0 = abs(Int(f.coeff(0)));
        if (c0 == 0) throw_domain(kModule, "reducible: x divides the polynomial");
        if (c0 <= 1000000) {
            for (Int t = 1; t * t <= c0; ++t) {
                if (!mpz_divisible_p(c0.get_mpz_t(), t.get_mpz_t())) continue;
                Int u = c0 / t;
                for (Int cand : {Int(t), Int(-t), Int(u), Int(-u)})
                    if (f.eval(cand) == 0)
                        throw_domain(kModule,
                                     "reducible: rational root " + cand.get_str());
            }
        }
    }

    bool certified = false;
    std::set<int> possible; // running intersection of factor-degree subset sums
    for (int i = 0; i <= d; ++i) possible.insert(i);
    for (const Int& p : first_screening_primes(disc, 25)) {
        auto fac = factor_mod_p(f, p);
        std::vector<int> degs;
        for (const auto& g : fac.factors)
            for (int j = 0; j < g.multiplicity; ++j) degs.push_back(g.factor.degree());
        if (degs.size() == 1 && degs[0] == d) {
            certified = true; // irreducible mod p
            break;
        }
        std::vector<char> sums(static_cast<size_t>(d) + 1, 0);
        sums[0] = 1;
        for (int deg : degs)
            for (int s = d; s >= deg; --s)
                if (sums[static_cast<size_t>(s - deg)]) sums[static_cast<size_t>(s)] = 1;
        std::set<int> keep;
        for (int s : possible)
            if (sums[static_cast<size_t>(s)]) keep.insert(s);
        possible = std::move(keep);
        if (possible.size() == 2 && possible.count(0) && possible.count(d)) {
            certified = true;
            break;
        }
    }
    if (!certified)
        throw_domain(kModule, "irreducibility not certified by mod-p screening");

    int r = count_real_roots(f);
    if ((d - r) % 2 != 0) throw_internal(kModule, "signature parity failure");
    return std::shared_ptr<const NumberField>(new NumberField(f, r, (d - r) / 2));
}

IsolatedRoots NumberField::roots(long digits) const {
    std::lock_guard<std::mutex> lock(cache_mu_);
    if (cache_enabled_ && root_cache_ && cache_digits_ >= digits) return *root_cache_;
    IsolatedRoots iso = isolate_roots(f_, digits);
    if (cache_enabled_) {
        root_cache_ = iso;
        cache_digits_ = digits;
    }
    return iso;
}

void NumberField::set_root_cache_enabled(bool enabled) const {
    std::lock_guard<std::mutex> lock(cache_mu_);
    cache_enabled_ = enabled;
    if (!enabled) {
        root_cache_.reset();
        cache_digits_ = 0;
    }
}

// ---- FieldElement ----

FieldElement::FieldElement(FieldPtr field, std::vector<Rat> coords)
    : field_(std::move(field)), coords_(std::move(coords)) {
    if (!field_) throw_internal(kModule, "element without a field");
    coords_.resize(static_cast<size_t>(field_->degree()), Rat(0));
    for (auto& q : coords_) q.canonicalize();
}

FieldElement FieldElement::from_rational(FieldPtr field, const Rat& value) {
    std::vector<Rat> c(static_cast<size_t>(field->degree()), Rat(0));
    c[0] = value;
    return FieldElement(std::move(field), std::move(c));
}

FieldElement FieldElement::generator(FieldPtr field) {
    std::vector<Rat> c(static_cast<size_t>(field->degree()), Rat(0));
    if (field->degree() == 1) {
        // theta is the root of the degree-1 minpoly
        Rat root(-field->minpoly().coeff(0), field->minpoly().lead());
        root.canonicalize();
        c[0] = root;
    } else {
        c[1] = 1;
    }
    return FieldElement(std::move(field), std::move(c));
}

bool FieldElement::is_zero() const {
    for (const auto& q : coords_)
        if (q != 0) return false;
    return true;
}

bool FieldElement::is_rational() const {
    for (size_t i = 1; i < coords_.size(); ++i)
        if (coords_[i] != 0) return false;
    return true;
}

Rat FieldElement::rational_value() const {
    if (!is_rational()) throw_domain(kModule, "element is not rational");
    return coords_[0];
}

bool FieldElement::is_integral_coords() const {
    for (const auto& q : coords_)
        if (q.get_den() != 1) return false;
    return true;
}

namespace {
void check_same_field(const FieldElement& a, const FieldElement& b) {
    if (a.field().get() != b.field().get() && a.field()->minpoly() != b.field()->minpoly())
        throw_domain(kModule, "elements of different fields");
}

// reduce a rational coefficient vector mod the monic minpoly
std::vector<Rat> reduce_mod_field(std::vector<Rat> v, const IntPoly& f) {
    int d = f.degree();
    for (int i = static_cast<int>(v.size()) - 1; i >= d; --i) {
        Rat t = v[static_cast<size_t>(i)];
        if (t == 0) continue;
        v[static_cast<size_t>(i)] = 0;
        for (int j = 0; j < d; ++j)
            v[static_cast<size_t>(i - d + j)] -= t * Rat(f.coeff(static_cast<size_t>(j)));
    }
    v.resize(static_cast<size_t>(d));
    return v;
}
} // namespace

FieldElement FieldElement::operator+(const FieldElement& o) const {
    check_same_field(*this, o);
    std::vector<Rat> c(coords_);
    for (size_t i = 0; i < c.size(); ++i) c[i] += o.coords_[i];
    return FieldElement(field_, std::move(c));
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
    check_same_field(*this, o);
    std::vector<Rat> c(coords_);
    for (size_t i = 0; i < c.size(); ++i) c[i] -= o.coords_[i];
    return FieldElement(field_, std::move(c));
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
    check_same_field(*this, o);
    size_t d = coords_.size();
    std::vector<Rat> prod(2 * d - 1, Rat(0));
    for (size_t i = 0; i < d; ++i) {
        if (coords_[i] == 0) continue;
        for (size_t j = 0; j < d; ++j) prod[i + j] += coords_[i] * o.coords_[j];
    }
    return FieldElement(field_, reduce_mod_field(std::move(prod), field_->minpoly()));
}

FieldElement FieldElement::scaled(const Rat& k) const {
    std::vector<Rat> c(coords_);
    for (auto& q : c) q *= k;
    return FieldElement(field_, std::move(c));
}

FieldElement FieldElement::inverse() const {
    if (is_zero()) throw_domain(kModule, "division by zero element");
    QPoly a;
    a.c.assign(coords_.begin(), coords_.end());
    a.trim();
    auto [g, s, t] = qpoly_xgcd(QPoly::from(field_->minpoly()), a);
    if (g.degree() != 0)
        throw_internal(kModule, "inverse failed; minimal polynomial not irreducible?");
    std::vector<Rat> c(static_cast<size_t>(field_->degree()), Rat(0));
    for (size_t i = 0; i < t.c.size(); ++i) c[i] = t.c[i] / g.c[0];
    return FieldElement(field_, std::move(c));
}

FieldElement FieldElement::pow(long n) const {
    if (n < 0) return inverse().pow(-n);
    FieldElement result = from_rational(field_, Rat(1));
    FieldElement base = *this;
    unsigned long e = static_cast<unsigned long>(n);
    while (e > 0) {
        if (e & 1) result = result * base;
        base = base * base;
        e >>= 1;
    }
    return result;
}

bool FieldElement::operator==(const FieldElement& o) const {
    if (field_.get() != o.field_.get() && field_->minpoly() != o.field_->minpoly()) return false;
    return coords_ == o.coords_;
}

Rat FieldElement::norm() const {
    // N(beta) = Res(f, c) / m^d for beta = c(theta)/m with integer c
    Int m = 1;
    for (const auto& q : coords_) mpz_lcm(m.get_mpz_t(), m.get_mpz_t(), q.get_den().get_mpz_t());
    std::vector<Int> ic(coords_.size());
    for (size_t i = 0; i < coords_.size(); ++i) {
        Rat v = coords_[i] * Rat(m);
        ic[i] = v.get_num();
    }
    IntPoly c(std::move(ic));
    if (c.is_zero()) return Rat(0);
    Int res = resultant(field_->minpoly(), c);
    Int md;
    mpz_pow_ui(md.get_mpz_t(), m.get_mpz_t(), static_cast<unsigned long>(field_->degree()));
    Rat out(res, md);
    out.canonicalize();
    return out;
}

std::vector<std::string> FieldElement::serialize() const {
    std::vector<std::string> out;
    out.reserve(coords_.size());
    for (const auto& q : coords_) out.push_back(q.get_str());
    return out;
}

FieldElement FieldElement::deserialize(FieldPtr field, const std::vector<std::string>& coords) {
    std::vector<Rat> c;
    c.reserve(coords.size());
    for (const auto& s : coords) {
        Rat q;
        if (q.set_str(s, 10) != 0) throw_parse(kModule, "bad rational '" + s + "'");
        q.canonicalize();
        c.push_back(std::move(q));
    }
    return FieldElement(std::move(field), std::move(c));
}

// ---- minimal polynomial via resultant interpolation ----

namespace {

// Res_y(f(y), t - c(y)) for integer t
Int charpoly_value_at(const IntPoly& f, const IntPoly& c, const Int& t) {
    IntPoly g = IntPoly({0}) - c; // -c
    g = g + IntPoly::monomial(t, 0);
    return resultant(f, g);
}

// exact Newton interpolation of a degree-<=d integer polynomial from d+1 points
IntPoly interpolate_integer(const std::vector<Int>& ts, const std::vector<Int>& vs) {
    size_t n = ts.size();
    std::vector<Rat> coef(n); // Newton coefficients
    std::vector<Rat> divided(n);
    for (size_t i = 0; i < n; ++i) divided[i] = Rat(vs[i]);
    coef[0] = divided[0];
    for (size_t k = 1; k < n; ++k) {
        for (size_t i = 0; i + k < n; ++i)
            divided[i] = (divided[i + 1] - divided[i]) / Rat(ts[i + k] - ts[i]);
        coef[k] = divided[0];
    }
    // expand sum coef[k] * prod_{i<k} (x - t_i)
    std::vector<Rat> acc{coef[n - 1]};
    for (size_t k = n - 1; k-- > 0;) {
        std::vector<Rat> next(acc.size() + 1, Rat(0));
        for (size_t i = 0; i < acc.size(); ++i) {
            next[i + 1] += acc[i];
            next[i] -= acc[i] * Rat(ts[k]);
        }
        next[0] += coef[k];
        acc = std::move(next);
    }
    std::vector<Int> out(acc.size());
    for (size_t i = 0; i < acc.size(); ++i) {
        if (acc[i].get_den() != 1)
            throw_internal(kModule, "characteristic polynomial interpolation not integral");
        out[i] = acc[i].get_num();
    }
    return IntPoly(std::move(out));
}

} // namespace

IntPoly min_poly_over_Q(const FieldElement& beta) {
    const IntPoly& f = beta.field()->minpoly();
    int d = beta.field()->degree();

    if (beta.is_rational()) {
        Rat v = beta.rational_value();
        return IntPoly({Int(-v.get_num()), Int(v.get_den())}).primitive_part();
    }
    bool affine = true;
    for (size_t i = 2; i < beta.coords().size(); ++i)
        if (beta.coords()[i] != 0) affine = false;
    if (affine) {
        // u + w*theta generates the whole field; the minimal polynomial is the
        // affine root transform of f
        return compose_affine(f, beta.coords()[0], beta.coords()[1]);
    }

    Int m = 1;
    for (const auto& q : beta.coords()) mpz_lcm(m.get_mpz_t(), m.get_mpz_t(), q.get_den().get_mpz_t());
    std::vector<Int> ic(beta.coords().size());
    for (size_t i = 0; i < beta.coords().size(); ++i) {
        Rat v = beta.coords()[i] * Rat(m);
        ic[i] = v.get_num();
    }
    IntPoly c(std::move(ic));

    std::vector<Int> ts, vs;
    ts.reserve(static_cast<size_t>(d) + 1);
    for (int j = 0; j <= d; ++j) {
        Int t = Int(j - d / 2);
        ts.push_back(t);
        vs.push_back(charpoly_value_at(f, c, t));
    }
    IntPoly charpoly = interpolate_integer(ts, vs);
    if (charpoly.degree() != d || !charpoly.is_monic())
        throw_internal(kModule, "characteristic polynomial has unexpected shape");
    IntPoly mp_scaled = squarefree_part(charpoly); // minimal polynomial of m*beta
    // substitute x -> m*x to reach beta itself
    return compose_affine(mp_scaled, Rat(0), Rat(1, m));
}

// ---- exact torsion decision ----

namespace {
long euler_phi(long n) {
    long result = n;
    long m = n;
    for (long p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            while (m % p == 0) m /= p;
            result -= result / p;
        }
    }
    if (m > 1) result -= result / m;
    return result;
}

// x^n mod g (g monic, integer), exact
bool x_pow_n_is_one(const IntPoly& g, long n) {
    IntPoly acc = IntPoly::one();
    IntPoly base = IntPoly::x().divmod_monic(g).second;
    long e = n;
    while (e > 0) {
        if (e & 1) acc = (acc * base).divmod_monic(g).second;
        base = (base * base).divmod_monic(g).second;
        e >>= 1;
    }
    return acc == IntPoly::one();
}
} // namespace

bool minpoly_is_torsion(const IntPoly& g) {
    if (g.degree() < 1) return false;
    if (g == IntPoly::x()) return true; // beta = 0
    if (!g.is_monic()) return false;
    long m = g.degree();
    Int c0 = abs(Int(g.coeff(0)));
    if (c0 != 1) return false;
    long bound = 2 * m * m + 4;
    for (long n = 1; n <= bound; ++n) {
        if (euler_phi(n) != m) continue;
        if (x_pow_n_is_one(g, n)) return true;
    }
    return false;
}

// ---- heights ----

namespace {
HeightEstimate finish_height(const MahlerLog& ml, int deg, long digits) {
    HeightEstimate est;
    mpfr_prec_t prec = ml.value.prec();
    Real degr = Real::of(static_cast<long>(deg), prec);
    est.value = ml.value / degr;
    est.error_bound = ml.error / degr;
    Real tol = pow(Real::of(10L, prec), Real::of(-digits, prec));
    if (!(est.error_bound < tol))
        throw_limit(kModule, "height error bound did not reach the requested digits");
    return est;
}
} // namespace

HeightEstimate height(const FieldElement& beta, long digits) {
    if (digits < 1) digits = 1;
    IntPoly g = min_poly_over_Q(beta);
    if (minpoly_is_torsion(g)) {
        HeightEstimate est;
        est.is_zero = true;
        return est;
    }
    long work = digits;
    for (int attempt = 0; attempt < 5; ++attempt) {
        MahlerLog ml = mahler_log(g, work);
        mpfr_prec_t prec = ml.value.prec();
        Real tol = pow(Real::of(10L, prec), Real::of(-digits, prec));
        Real degr = Real::of(static_cast<long>(g.degree()), prec);
        if (ml.error / degr < tol) return finish_height(ml, g.degree(), digits);
        work *= 2;
    }
    throw_limit(kModule, "height computation did not converge");
}

HeightEstimate height_affine_of_generator(const FieldPtr& field, const Rat& u, const Rat& w,
                                          long digits) {
    if (w == 0) return height(FieldElement::from_rational(field, u), digits);
    IntPoly g = compose_affine(field->minpoly(), u, w);
    if (minpoly_is_torsion(g)) {
        HeightEstimate est;
        est.is_zero = true;
        return est;
    }
    long work = digits + 4;
    for (int attempt = 0; attempt < 5; ++attempt) {
        IsolatedRoots iso = field->roots(work);
        MahlerLog ml = mahler_log_affine(g, iso, u, w);
        mpfr_prec_t prec = ml.value.prec();
        Real tol = pow(Real::of(10L, prec), Real::of(-digits, prec));
        Real degr = Real::of(static_cast<long>(g.degree()), prec);
        if (ml.error / degr < tol) return finish_height(ml, g.degree(), digits);
        work *= 2;
    }
    throw_limit(kModule, "height computation did not converge");
}

// ---- ell-th power decision ----

namespace {

bool rational_lth_root(const Rat& v, unsigned ell, Rat& out) {
    if (v == 0) {
        out = 0;
        return true;
    }
    Int num = v.get_num(), den = v.get_den();
    bool negative = num < 0;
    if (negative && ell % 2 == 0) return false;
    Int anum = abs(num), rn, rd;
    if (mpz_root(rn.get_mpz_t(), anum.get_mpz_t(), ell) == 0) return false;
    if (mpz_root(rd.get_mpz_t(), den.get_mpz_t(), ell) == 0) return false;
    out = Rat(negative ? Int(-rn) : rn, rd);
    out.canonicalize();
    return true;
}

Rat rational_from_real(const Real& x, const Int& max_den) {
    // exact dyadic value, then best continued-fraction convergent
    mpf_class dy(0, 4096);
    mpfr_get_f(dy.get_mpf_t(), x.get(), MPFR_RNDN);
    Rat q(dy);
    q.canonicalize();
    Int p0 = 0, q0 = 1, p1 = 1, q1 = 0;
    Rat rest = q;
    while (true) {
        Int a;
        mpz_fdiv_q(a.get_mpz_t(), rest.get_num().get_mpz_t(), rest.get_den().get_mpz_t());
        Int p2 = a * p1 + p0, q2 = a * q1 + q0;
        if (q2 > max_den) break;
        p0 = p1; q0 = q1; p1 = p2; q1 = q2;
        Rat frac = rest - Rat(a);
        if (frac == 0) break;
        rest = Rat(frac.get_den(), frac.get_num());
        rest.canonicalize();
    }
    Rat out(p1, q1);
    out.canonicalize();
    return out;
}

// solve V x = b for a complex matrix (Gaussian elimination, partial pivot)
std::vector<Complex> solve_complex(std::vector<std::vector<Complex>> a, std::vector<Complex> b,
                                   mpfr_prec_t prec) {
    size_t n = b.size();
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        Real best = a[col][col].abs();
        for (size_t r = col + 1; r < n; ++r) {
            Real v = a[r][col].abs();
            if (v > best) {
                best = v;
                piv = r;
            }
        }
        std::swap(a[col], a[piv]);
        std::swap(b[col], b[piv]);
        for (size_t r = col + 1; r < n; ++r) {
            Complex factor = a[r][col] / a[col][col];
            for (size_t k = col; k < n; ++k) a[r][k] = a[r][k] - factor * a[col][k];
            b[r] = b[r] - factor * b[col];
        }
    }
    std::vector<Complex> x(n, Complex(prec));
    for (size_t i = n; i-- > 0;) {
        Complex acc = b[i];
        for (size_t k = i + 1; k < n; ++k) acc = acc - a[i][k] * x[k];
        x[i] = acc / a[i][i];
    }
    return x;
}

} // namespace

PowerCheck is_lth_power(const FieldElement& beta, unsigned ell) {
    PowerCheck out;
    if (ell < 2) throw_domain(kModule, "power exponent must be >= 2");
    const FieldPtr& F = beta.field();
    int d = F->degree();

    if (beta.is_zero()) {
        out.kind = PowerCheck::Kind::yes;
        out.witness = FieldElement::from_rational(F, Rat(0));
        out.note = "zero";
        return out;
    }

    // rational witness fast path
    if (beta.is_rational()) {
        Rat root;
        if (rational_lth_root(beta.rational_value(), ell, root)) {
            out.kind = PowerCheck::Kind::yes;
            out.witness = FieldElement::from_rational(F, root);
            out.note = "rational root";
            return out;
        }
        if (d == 1) {
            out.kind = PowerCheck::Kind::no;
            out.note = "not an ell-th power in Q";
            return out;
        }
    }

    // norm obstruction: N(beta) must be an ell-th power in Q
    {
        Rat n = beta.norm();
        Rat root;
        if (!rational_lth_root(n, ell, root)) {
            out.kind = PowerCheck::Kind::no;
            out.note = "norm obstruction: N(beta) = " + n.get_str() + " is not an " +
                       std::to_string(ell) + "th power in Q";
            return out;
        }
    }

    // local obstruction at split primes not dividing disc or denominators
    {
        Int disc = poly_discriminant(F->minpoly());
        Int den = 1;
        for (const auto& q : beta.coords())
            mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den().get_mpz_t());
        Int p = 2;
        int examined = 0;
        while (examined < 12) {
            mpz_nextprime(p.get_mpz_t(), p.get_mpz_t());
            if (mpz_divisible_p(disc.get_mpz_t(), p.get_mpz_t())) continue;
            if (mpz_divisible_p(den.get_mpz_t(), p.get_mpz_t())) continue;
            Int pm1 = p - 1;
            if (!mpz_divisible_ui_p(pm1.get_mpz_t(), ell)) continue;
            auto fac = factor_mod_p(F->minpoly(), p);
            for (const auto& g : fac.factors) {
                if (g.factor.degree() != 1) continue;
                ++examined;
                Int root = p - g.factor.coeff(0); // zero of x + c
                mpz_mod(root.get_mpz_t(), root.get_mpz_t(), p.get_mpz_t());
                // evaluate beta at the residue
                Int value = 0;
                for (size_t i = beta.coords().size(); i-- > 0;) {
                    Rat q = beta.coords()[i];
                    Int numv = q.get_num() % p, denv = q.get_den() % p, inv;
                    mpz_invert(inv.get_mpz_t(), denv.get_mpz_t(), p.get_mpz_t());
                    value = (value * root + numv * inv) % p;
                }
                mpz_mod(value.get_mpz_t(), value.get_mpz_t(), p.get_mpz_t());
                if (value == 0) continue;
                Int e = pm1 / Int(static_cast<long>(ell));
                Int test;
                mpz_powm(test.get_mpz_t(), value.get_mpz_t(), e.get_mpz_t(), p.get_mpz_t());
                if (test != 1) {
                    out.kind = PowerCheck::Kind::no;
                    out.note = "local obstruction: residue at a degree-1 prime over " +
                               p.get_str() + " is not an " + std::to_string(ell) +
                               "th power";
                    return out;
                }
            }
        }
    }

    // exact reconstruction from numeric embeddings
    double combos = 1;
    for (int i = 0; i < d; ++i) combos *= ell;
    if (combos <= 20000) {
        long digits = 60;
        IsolatedRoots iso = F->roots(digits);
        mpfr_prec_t prec = iso.prec;
        std::vector<Complex> values;
        values.reserve(static_cast<size_t>(d));
        for (const auto& ball : iso.balls) {
            Complex acc(prec);
            for (size_t i = beta.coords().size(); i-- > 0;) {
                acc = acc * ball.center;
                acc.re = acc.re + Real::of(beta.coords()[i], prec);
            }
            values.push_back(acc);
        }
        // principal ell-th roots and the rotation unit
        Real pi(prec);
        mpfr_const_pi(pi.get(), MPFR_RNDN);
        auto polar_root = [&](const Complex& v) {
            Real r = v.abs();
            Real theta(prec);
            mpfr_atan2(theta.get(), v.im.get(), v.re.get(), MPFR_RNDN);
            Real rr = pow(r, Real::of(1L, prec) / Real::of(static_cast<long>(ell), prec));
            Real tt = theta / Real::of(static_cast<long>(ell), prec);
            Real c(prec), s(prec);
            mpfr_sin_cos(s.get(), c.get(), tt.get(), MPFR_RNDN);
            return Complex(rr * c, rr * s);
        };
        Real unit_angle = Real::of(2L, prec) * pi / Real::of(static_cast<long>(ell), prec);
        Real uc(prec), us(prec);
        mpfr_sin_cos(us.get(), uc.get(), unit_angle.get(), MPFR_RNDN);
        Complex zeta(uc, us);

        std::vector<Complex> principal;
        for (const auto& v : values) principal.push_back(polar_root(v));

        std::vector<std::vector<Complex>> vand(static_cast<size_t>(d));
        for (int i = 0; i < d; ++i) {
            Complex powz(Real::of(1L, prec), Real::of(0L, prec));
            for (int k = 0; k < d; ++k) {
                vand[static_cast<size_t>(i)].push_back(powz);
                powz = powz * iso.balls[static_cast<size_t>(i)].center;
            }
        }

        std::vector<unsigned> choice(static_cast<size_t>(d), 0);
        Int max_den = 1000000;
        while (true) {
            std::vector<Complex> rhs;
            rhs.reserve(static_cast<size_t>(d));
            for (int i = 0; i < d; ++i) {
                Complex v = principal[static_cast<size_t>(i)];
                for (unsigned j = 0; j < choice[static_cast<size_t>(i)]; ++j) v = v * zeta;
                rhs.push_back(v);
            }
            std::vector<Complex> sol = solve_complex(vand, rhs, prec);
            bool plausible = true;
            std::vector<Rat> cand(static_cast<size_t>(d));
            Real tiny = pow(Real::of(10L, prec), Real::of(-20L, prec));
            for (int k = 0; k < d && plausible; ++k) {
                if (!(abs(sol[static_cast<size_t>(k)].im) < tiny)) plausible = false;
                else cand[static_cast<size_t>(k)] = rational_from_real(sol[static_cast<size_t>(k)].re, max_den);
            }
            if (plausible) {
                FieldElement gamma(F, cand);
                if (gamma.pow(static_cast<long>(ell)) == beta) {
                    out.kind = PowerCheck::Kind::yes;
                    out.witness = std::move(gamma);
                    out.note = "reconstructed root";
                    return out;
                }
            }
            // next assignment
            int pos = 0;
            while (pos < d) {
                if (++choice[static_cast<size_t>(pos)] < ell) break;
                choice[static_cast<size_t>(pos)] = 0;
                ++pos;
            }
            if (pos == d) break;
        }
    }

    out.kind = PowerCheck::Kind::unknown;
    out.note = "no obstruction found and no root reconstructed";
    return out;
}

} // namespace bogocert
