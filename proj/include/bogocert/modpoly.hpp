#ifndef BOGOCERT_MODPOLY_HPP
#define BOGOCERT_MODPOLY_HPP

#include "bogocert/intpoly.hpp"

#include <utility>
#include <vector>

namespace bogocert {

/// Dense polynomial over Z/p (p prime), coefficients canonical in [0, p).
class ModPoly {
public:
    ModPoly() = default;
    explicit ModPoly(Int p) : p_(std::move(p)) {}
    ModPoly(Int p, std::vector<Int> coeffs);
    static ModPoly reduce(const IntPoly& f, const Int& p);
    static ModPoly x(const Int& p) { return ModPoly(p, {Int(0), Int(1)}); }
    static ModPoly constant(const Int& p, const Int& c) { return ModPoly(p, {c}); }

    const Int& modulus() const { return p_; }
    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const Int& lead() const;
    const Int& coeff(size_t i) const;
    const std::vector<Int>& coeffs() const { return c_; }
    bool is_monic() const { return !c_.empty() && c_.back() == 1; }

    ModPoly operator+(const ModPoly& o) const;
    ModPoly operator-(const ModPoly& o) const;
    ModPoly operator*(const ModPoly& o) const;
    ModPoly scaled(const Int& k) const;
    bool operator==(const ModPoly& o) const { return p_ == o.p_ && c_ == o.c_; }

    ModPoly make_monic() const;
    ModPoly derivative() const;
    Int eval(const Int& t) const;

    /// division with invertible leading divisor coefficient: {quotient, remainder}
    std::pair<ModPoly, ModPoly> divmod(const ModPoly& divisor) const;
    ModPoly rem(const ModPoly& divisor) const { return divmod(divisor).second; }

    /// monic gcd
    static ModPoly gcd(ModPoly a, ModPoly b);
    /// extended gcd: returns {g, s, t} monic with s*a + t*b = g
    static std::tuple<ModPoly, ModPoly, ModPoly> xgcd(const ModPoly& a, const ModPoly& b);
    /// base^e mod modulus
    static ModPoly pow_mod(const ModPoly& base, const Int& e, const ModPoly& modulus);

    /// lift to Z[x] with canonical representatives in [0, p)
    IntPoly lift() const;
    /// total order: by degree, then coefficient sequence
    static bool less(const ModPoly& a, const ModPoly& b);

private:
    Int p_;
    std::vector<Int> c_;
    void normalize();
};

struct ModPFactor {
    ModPoly factor; // monic irreducible
    int multiplicity = 1;
};

/// Complete factorization of f mod p: f = unit * prod factor^multiplicity.
struct ModPFactorization {
    Int p;
    Int unit; // leading coefficient of f mod p
    std::vector<ModPFactor> factors; // canonically sorted
};

/// Squarefree split, distinct-degree, then equal-degree splitting.
/// Deterministic output (factors sorted by degree then coefficients).
/// Error if f vanishes mod p.
ModPFactorization factor_mod_p(const IntPoly& f, const Int& p);

/// true iff f mod p is irreducible (degree >= 1)
bool irreducible_mod_p(const IntPoly& f, const Int& p);

} // namespace bogocert

#endif
