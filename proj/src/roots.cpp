#include "bogocert/roots.hpp"

#include "bogocert/errors.hpp"

#include <algorithm>

namespace bogocert {

namespace {
const char* kModule = "numberfield";

Complex eval_complex(const IntPoly& f, const Complex& z, mpfr_prec_t prec) {
    Complex acc(prec);
    for (size_t i = f.coeffs().size(); i-- > 0;) {
        acc = acc * z;
        acc.re = acc.re + Real::of(f.coeff(i), prec);
    }
    return acc;
}

Real log_plus(const Real& t, mpfr_prec_t prec) {
    if (t <= Real::of(1L, prec)) return Real::of(0L, prec);
    return log(t);
}

struct Attempt {
    std::vector<Complex> z;
    std::vector<Real> radius;
    bool ok = false;
};

Attempt run_durand_kerner(const IntPoly& f, mpfr_prec_t prec, const Real& target_radius) {
    Attempt at;
    int m = f.degree();
    IntPoly fd = f.derivative();

    // Cauchy bound for the initial circle
    Real lead = abs(Real::of(f.lead(), prec));
    Real bound = Real::of(0L, prec);
    for (int i = 0; i < m; ++i) bound = max(bound, abs(Real::of(f.coeff(static_cast<size_t>(i)), prec)) / lead);
    Real radius0 = Real::of(1L, prec) + bound;

    Real pi(prec);
    mpfr_const_pi(pi.get(), MPFR_RNDN);
    at.z.reserve(static_cast<size_t>(m));
    for (int j = 0; j < m; ++j) {
        Real angle = (Real::of(2L, prec) * pi * Real::of(static_cast<long>(j), prec)) /
                         Real::of(static_cast<long>(m), prec) +
                     Real::of(0.4, prec);
        Real c(prec), s(prec);
        mpfr_sin_cos(s.get(), c.get(), angle.get(), MPFR_RNDN);
        at.z.emplace_back(radius0 * c, radius0 * s);
    }

    Real tol = two_pow(-(static_cast<long>(prec) - 24), prec) * max(Real::of(1L, prec), radius0);
    Complex lead_c(Real::of(f.lead(), prec), Real::of(0L, prec));
    const int max_iters = 800;
    for (int iter = 0; iter < max_iters; ++iter) {
        Real worst = Real::of(0L, prec);
        for (int j = 0; j < m; ++j) {
            Complex denom = lead_c;
            for (int k = 0; k < m; ++k) {
                if (k == j) continue;
                denom = denom * (at.z[static_cast<size_t>(j)] - at.z[static_cast<size_t>(k)]);
            }
            if (denom.abs().is_zero()) return at; // coincident points; retry at higher precision
            Complex corr = eval_complex(f, at.z[static_cast<size_t>(j)], prec) / denom;
            at.z[static_cast<size_t>(j)] = at.z[static_cast<size_t>(j)] - corr;
            worst = max(worst, corr.abs());
        }
        if (worst < tol) break;
    }

    // inclusion disks: the nearest root of f lies within deg*|f(z)/f'(z)| of z
    at.radius.reserve(static_cast<size_t>(m));
    Real slack = two_pow(-(static_cast<long>(prec) - 16), prec);
    for (int j = 0; j < m; ++j) {
        Real fz = eval_complex(f, at.z[static_cast<size_t>(j)], prec).abs();
        Real dfz = eval_complex(fd, at.z[static_cast<size_t>(j)], prec).abs();
        if (dfz.is_zero()) return at;
        Real r = Real::of(static_cast<long>(m), prec) * fz / dfz;
        r = r * (Real::of(1L, prec) + two_pow(-16, prec)) + slack;
        at.radius.push_back(r);
    }
    for (int j = 0; j < m; ++j) {
        if (!(at.radius[static_cast<size_t>(j)] < target_radius)) return at;
        for (int k = j + 1; k < m; ++k) {
            Real dist = (at.z[static_cast<size_t>(j)] - at.z[static_cast<size_t>(k)]).abs();
            if (!(dist > at.radius[static_cast<size_t>(j)] + at.radius[static_cast<size_t>(k)]))
                return at; // disks overlap; not isolated yet
        }
    }
    at.ok = true;
    return at;
}

} // namespace

IsolatedRoots isolate_roots(const IntPoly& f, long digits) {
    if (f.degree() < 1) throw_internal(kModule, "root isolation needs degree >= 1");
    if (digits < 1) digits = 1;
    IsolatedRoots out;
    int m = f.degree();

    mpfr_prec_t prec = static_cast<mpfr_prec_t>(64 + digits * 10 / 3 + 16 * (m > 8 ? 8 : m));
    const mpfr_prec_t cap = 1 << 20;

    if (m == 1) {
        Rat root(-f.coeff(0), f.coeff(1));
        root.canonicalize();
        Real re = Real::of(root, prec);
        RootBall ball{Complex(re, Real::of(0L, prec)),
                      two_pow(-(static_cast<long>(prec) - 8), prec) * (Real::of(1L, prec) + abs(re))};
        out.balls.push_back(std::move(ball));
        out.prec = prec;
        return out;
    }

    while (prec <= cap) {
        Real target = pow(Real::of(10L, prec), Real::of(-(digits + 2), prec)) /
                      Real::of(static_cast<long>(m + 1), prec);
        Attempt at = run_durand_kerner(f, prec, target);
        if (at.ok) {
            out.prec = prec;
            out.balls.reserve(static_cast<size_t>(m));
            for (int j = 0; j < m; ++j)
                out.balls.push_back({at.z[static_cast<size_t>(j)], at.radius[static_cast<size_t>(j)]});
            return out;
        }
        prec *= 2;
    }
    throw_limit(kModule, "root isolation exceeded the precision cap");
}

namespace {

MahlerLog sum_log_plus(const Real& log_lead, const std::vector<Real>& mags,
                       const std::vector<Real>& radii, mpfr_prec_t prec, int m) {
    Real value = log_lead;
    Real err = Real::of(0L, prec);
    for (size_t i = 0; i < mags.size(); ++i) {
        value = value + log_plus(mags[i], prec);
        Real hi = mags[i] + radii[i];
        Real lo = mags[i] - radii[i];
        if (lo.sign() < 0) lo = Real::of(0L, prec);
        err = err + (log_plus(hi, prec) - log_plus(lo, prec));
    }
    // generous absolute slack for accumulated rounding
    err = err + Real::of(static_cast<long>(m + 8), prec) *
                    (Real::of(1L, prec) + abs(value)) * two_pow(-(static_cast<long>(prec) - 12), prec);
    return {value, err};
}

} // namespace

MahlerLog mahler_log(const IntPoly& f, long digits) {
    IsolatedRoots iso = isolate_roots(f, digits);
    mpfr_prec_t prec = iso.prec;
    std::vector<Real> mags, radii;
    mags.reserve(iso.balls.size());
    radii.reserve(iso.balls.size());
    for (const auto& b : iso.balls) {
        mags.push_back(b.center.abs());
        radii.push_back(b.radius);
    }
    Int alead = abs(Int(f.lead()));
    return sum_log_plus(log(Real::of(alead, prec)), mags, radii, prec, f.degree());
}

MahlerLog mahler_log_affine(const IntPoly& f_primitive_new, const IsolatedRoots& roots_of_f,
                            const Rat& u, const Rat& w) {
    mpfr_prec_t prec = roots_of_f.prec;
    Real ur = Real::of(u, prec), wr = Real::of(w, prec);
    Real wabs = abs(wr);
    std::vector<Real> mags, radii;
    mags.reserve(roots_of_f.balls.size());
    radii.reserve(roots_of_f.balls.size());
    for (const auto& b : roots_of_f.balls) {
        Complex v(ur + wr * b.center.re, wr * b.center.im);
        mags.push_back(v.abs());
        radii.push_back(wabs * b.radius);
    }
    Int alead = abs(Int(f_primitive_new.lead()));
    return sum_log_plus(log(Real::of(alead, prec)), mags, radii, prec,
                        static_cast<int>(roots_of_f.balls.size()));
}

} // namespace bogocert
