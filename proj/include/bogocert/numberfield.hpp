#ifndef BOGOCERT_NUMBERFIELD_HPP
#define BOGOCERT_NUMBERFIELD_HPP

#include "bogocert/intpoly.hpp"
#include "bogocert/roots.hpp"

#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

namespace bogocert {

/// Number field Q[x]/(f) for a monic integer polynomial certified irreducible
/// by mod-p screening. Carries the exact signature (real embeddings, conjugate
/// pairs) computed by Sturm sequences.
class NumberField : public std::enable_shared_from_this<NumberField> {
public:
    /// Screens irreducibility over the first 25 primes not dividing disc(f):
    /// accepted only with a certificate (an irreducible mod-p pattern, or
    /// factor-degree subset sums pinning {0, d}); otherwise an explicit
    /// "irreducibility not certified" error. Non-monic or certified-reducible
    /// input is a construction error.
    static std::shared_ptr<const NumberField> create(const IntPoly& minpoly);

    const IntPoly& minpoly() const { return f_; }
    int degree() const { return degree_; }
    int real_places() const { return real_places_; }
    int complex_pairs() const { return complex_pairs_; }
    /// number of archimedean places
    int delta() const { return real_places_ + complex_pairs_; }

    /// isolated roots of the minimal polynomial, cached per field; the cache is
    /// re-computed when more digits are requested and can be disabled.
    IsolatedRoots roots(long digits) const;
    void set_root_cache_enabled(bool enabled) const;

    std::vector<std::string> serialize() const { return f_.serialize(); }

private:
    explicit NumberField(IntPoly f, int r, int rp);
    IntPoly f_;
    int degree_;
    int real_places_;
    int complex_pairs_;
    mutable std::mutex cache_mu_;
    mutable std::optional<IsolatedRoots> root_cache_;
    mutable long cache_digits_ = 0;
    mutable bool cache_enabled_ = true;
};

using FieldPtr = std::shared_ptr<const NumberField>;

/// Element in the power basis with exact rational coordinates.
class FieldElement {
public:
    FieldElement(FieldPtr field, std::vector<Rat> coords);
    static FieldElement from_rational(FieldPtr field, const Rat& value);
    static FieldElement generator(FieldPtr field);

    const FieldPtr& field() const { return field_; }
    const std::vector<Rat>& coords() const { return coords_; }
    bool is_zero() const;
    bool is_rational() const;
    Rat rational_value() const; // requires is_rational()
    bool is_integral_coords() const; // all coordinates have denominator 1

    FieldElement operator+(const FieldElement& o) const;
    FieldElement operator-(const FieldElement& o) const;
    FieldElement operator*(const FieldElement& o) const;
    FieldElement scaled(const Rat& k) const;
    FieldElement inverse() const;
    FieldElement pow(long n) const; // negative n via inverse
    bool operator==(const FieldElement& o) const;

    /// field norm N(beta), exact rational
    Rat norm() const;

    std::vector<std::string> serialize() const; // "num/den" strings, constant first
    static FieldElement deserialize(FieldPtr field, const std::vector<std::string>& coords);

private:
    FieldPtr field_;
    std::vector<Rat> coords_;
};

/// Minimal polynomial over Q: squarefree part of the characteristic polynomial
/// Res_y(f(y), x - b(y)), computed by resultant interpolation; returned as the
/// primitive integer polynomial with positive leading coefficient (monic iff
/// the element is an algebraic integer).
IntPoly min_poly_over_Q(const FieldElement& beta);

/// Exact decision: the primitive minimal polynomial belongs to a root of unity
/// or zero (x itself or a cyclotomic polynomial).
bool minpoly_is_torsion(const IntPoly& primitive_minpoly);

struct HeightEstimate {
    bool is_zero = false; // exact: height is 0 (root of unity or zero)
    Real value;           // natural-log units
    Real error_bound;
    HeightEstimate() : value(64), error_bound(64) {}
    double value_d() const { return value.to_double(); }
};

/// Absolute logarithmic height via the Mahler-measure form
/// h = (1/deg)(log|lead| + sum log^+|roots|) of the minimal polynomial.
/// error_bound < 10^-digits; the zero case is decided exactly.
HeightEstimate height(const FieldElement& beta, long digits = 30);

/// Height of u + w*theta for the field generator theta, reusing isolated roots.
HeightEstimate height_affine_of_generator(const FieldPtr& field, const Rat& u, const Rat& w,
                                          long digits = 30);

struct PowerCheck {
    enum class Kind { yes, no, unknown } kind = Kind::unknown;
    std::optional<FieldElement> witness; // present iff yes
    std::string note;                    // certificate description for no / unknown
};

/// Is beta an ell-th power in its field? yes with an explicit root (exact
/// reconstruction from numeric embeddings, verified exactly), no with a norm or
/// local-nonsolvability certificate, else unknown.
PowerCheck is_lth_power(const FieldElement& beta, unsigned ell);

} // namespace bogocert

#endif
