#ifndef BOGOCERT_INTPOLY_HPP
#define BOGOCERT_INTPOLY_HPP

#include <gmpxx.h>

#include <initializer_list>
#include <string>
#include <vector>

namespace bogocert {

using Int = mpz_class;
using Rat = mpq_class;

/// Dense univariate polynomial over Z, coefficient of x^i at index i.
/// Canonical form: no trailing zero coefficients (zero polynomial = empty).
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<Int> coeffs) : c_(std::move(coeffs)) { trim(); }
    IntPoly(std::initializer_list<long> coeffs) {
        for (long v : coeffs) c_.emplace_back(v);
        trim();
    }

    static IntPoly zero() { return IntPoly(); }
    static IntPoly one() { return IntPoly({1}); }
    static IntPoly x() { return IntPoly({0, 1}); }
    /// x^n - a
    static IntPoly binomial(unsigned n, const Int& a);
    /// Monomial c*x^n.
    static IntPoly monomial(const Int& c, unsigned n);

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; } // -1 for zero
    const Int& lead() const;
    const std::vector<Int>& coeffs() const { return c_; }
    /// Coefficient of x^i (0 beyond the degree).
    const Int& coeff(size_t i) const;

    bool is_monic() const { return !c_.empty() && c_.back() == 1; }
    bool operator==(const IntPoly& o) const { return c_ == o.c_; }
    bool operator!=(const IntPoly& o) const { return c_ != o.c_; }

    IntPoly operator+(const IntPoly& o) const;
    IntPoly operator-(const IntPoly& o) const;
    IntPoly operator-() const;
    IntPoly operator*(const IntPoly& o) const;
    IntPoly operator*(const Int& k) const;

    IntPoly derivative() const;
    Int eval(const Int& t) const;
    Rat eval(const Rat& t) const;

    /// gcd of all coefficients (positive; 0 for the zero polynomial).
    Int content() const;
    /// content removed, leading coefficient made positive.
    IntPoly primitive_part() const;

    /// Quotient of exact division; error if the division is not exact.
    IntPoly divide_exact(const IntPoly& divisor) const;
    IntPoly divide_exact(const Int& k) const;
    /// Euclidean division by a monic divisor (exact over Z); returns {q, r}.
    std::pair<IntPoly, IntPoly> divmod_monic(const IntPoly& divisor) const;

    /// Pseudo-remainder: rem(lead(b)^(deg a - deg b + 1) * a, b).
    static IntPoly pseudo_rem(const IntPoly& a, const IntPoly& b);

    std::string to_string(const std::string& var = "x") const;
    /// Parse "x^2-x-1", "2x^3 + 7", "x", "-3" style expressions.
    static IntPoly parse(const std::string& text);
    /// Coefficient array of decimal strings, constant term first.
    std::vector<std::string> serialize() const;
    static IntPoly deserialize(const std::vector<std::string>& coeffs);

private:
    std::vector<Int> c_;
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
};

/// Resultant via subresultant pseudo-remainder sequences. Error if both zero.
Int resultant(const IntPoly& a, const IntPoly& b);

/// disc(f) = (-1)^(d(d-1)/2) Res(f, f') / lead(f); error for deg < 2.
Int poly_discriminant(const IntPoly& f);

/// gcd in Z[x], primitive with positive leading coefficient.
IntPoly poly_gcd(const IntPoly& a, const IntPoly& b);

/// f / gcd(f, f'), primitive, positive (monic when f is monic). Error on zero input.
IntPoly squarefree_part(const IntPoly& f);

/// Number of distinct real roots, by Sturm's theorem (f need not be squarefree).
int count_real_roots(const IntPoly& f);

/// b^deg(f) * f(a/b) for rational a/b, as an integer polynomial identity helper:
/// returns the integer vector of f evaluated contravariantly; used for root shifts.
/// compose_affine(f, u, w) = primitive integer polynomial with roots u + w*z for
/// every root z of f (w != 0).
IntPoly compose_affine(const IntPoly& f, const Rat& u, const Rat& w);

} // namespace bogocert

#endif
