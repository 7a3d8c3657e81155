#ifndef BOGOCERT_BOUNDEXPR_HPP
#define BOGOCERT_BOUNDEXPR_HPP

#include "bogocert/intpoly.hpp"
#include "bogocert/real.hpp"

#include <map>
#include <string>
#include <vector>

namespace bogocert {

/// Exact positive value of the form prod base^exponent with integer bases >= 2
/// and rational exponents. Bases are factored into primes on construction, so
/// equal values have identical factor maps and many comparisons stay symbolic.
class PowProduct {
public:
    static PowProduct one() { return PowProduct(); }
    /// base >= 1
    static PowProduct of(const Int& base, const Rat& exponent);
    static PowProduct of(const Rat& base, const Rat& exponent);

    PowProduct operator*(const PowProduct& o) const;
    PowProduct pow(const Rat& e) const;
    bool is_one() const { return factors_.empty(); }
    const std::map<Int, Rat>& factors() const { return factors_; }

    /// rounded-to-nearest evaluation
    Real evaluate(mpfr_prec_t prec) const;
    /// -1 / 0 / +1; symbolic when the factorizations decide it, else interval
    static int compare(const PowProduct& a, const PowProduct& b);

    std::string to_string() const;

private:
    std::map<Int, Rat> factors_;
    void insert(const Int& base, const Rat& exponent);
};

/// (2^(-1/x) + sqrt(1 + 4^(-1/x)))^(x/2) for x = r/d in (0, 1]
Real garza_value(const Rat& r_over_d, mpfr_prec_t prec);

/// Symbolic bound expression: a power product, a Garza archimedean value, or
/// the minimum of several expressions.
class BoundExpr {
public:
    enum class Kind { product, garza, min_of };

    static BoundExpr of(PowProduct p);
    static BoundExpr garza(const Rat& r_over_d);
    static BoundExpr min_of(std::vector<BoundExpr> parts);

    Kind kind() const { return kind_; }
    const PowProduct& product() const { return product_; }
    const Rat& garza_ratio() const { return garza_ratio_; }
    const std::vector<BoundExpr>& parts() const { return parts_; }

    Real evaluate(mpfr_prec_t prec) const;
    std::string to_string() const;
    bool structurally_equal(const BoundExpr& o) const;

private:
    Kind kind_ = Kind::product;
    PowProduct product_;
    Rat garza_ratio_;
    std::vector<BoundExpr> parts_;
};

} // namespace bogocert

#endif
