#include "bogocert/boundexpr.hpp"

#include "bogocert/errors.hpp"

#include <sstream>

namespace bogocert {

namespace {
const char* kModule = "bounds";

// smallest prime factor by trial division, capped; returns 1 if none found
Int small_factor(const Int& n) {
    if (mpz_probab_prime_p(n.get_mpz_t(), 30)) return n;
    for (Int p = 2; p * p <= n && p <= 1000000; mpz_nextprime(p.get_mpz_t(), p.get_mpz_t()))
        if (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t())) return p;
    return n; // unfactored composite kept as an opaque base
}
} // namespace

void PowProduct::insert(const Int& base, const Rat& exponent) {
    if (exponent == 0 || base == 1) return;
    auto it = factors_.find(base);
    if (it == factors_.end()) {
        factors_.emplace(base, exponent);
    } else {
        it->second += exponent;
        if (it->second == 0) factors_.erase(it);
    }
}

PowProduct PowProduct::of(const Int& base, const Rat& exponent) {
    if (base < 1) throw_domain(kModule, "power-product bases must be positive");
    PowProduct p;
    Int rest = base;
    while (rest > 1) {
        Int q = small_factor(rest);
        unsigned long mult = 0;
        while (mpz_divisible_p(rest.get_mpz_t(), q.get_mpz_t())) {
            rest /= q;
            ++mult;
        }
        p.insert(q, exponent * Rat(static_cast<long>(mult)));
    }
    return p;
}

PowProduct PowProduct::of(const Rat& base, const Rat& exponent) {
    if (base <= 0) throw_domain(kModule, "power-product bases must be positive");
    PowProduct p = of(Int(base.get_num()), exponent);
    return p * of(Int(base.get_den()), -exponent);
}

PowProduct PowProduct::operator*(const PowProduct& o) const {
    PowProduct p = *this;
    for (const auto& [b, e] : o.factors_) p.insert(b, e);
    return p;
}

PowProduct PowProduct::pow(const Rat& e) const {
    PowProduct p;
    if (e == 0) return p;
    for (const auto& [b, ex] : factors_) p.factors_.emplace(b, ex * e);
    return p;
}

Real PowProduct::evaluate(mpfr_prec_t prec) const {
    Real acc = Real::of(1L, prec);
    for (const auto& [b, e] : factors_) {
        Real base = Real::of(b, prec);
        Real expo = Real::of(e, prec);
        acc = acc * bogocert::pow(base, expo);
    }
    return acc;
}

int PowProduct::compare(const PowProduct& a, const PowProduct& b) {
    // diff = a / b
    PowProduct diff = a * b.pow(Rat(-1));
    if (diff.factors_.empty()) return 0;
    bool all_nonneg = true, all_nonpos = true;
    for (const auto& [base, e] : diff.factors_) {
        if (e > 0) all_nonpos = false;
        if (e < 0) all_nonneg = false;
    }
    if (all_nonneg) return 1;  // every base >= 2 with positive exponent
    if (all_nonpos) return -1;
    // values differ (prime-exponent vectors are independent); separate by interval
    for (mpfr_prec_t prec = 192; prec <= 4096; prec *= 2) {
        Real va = a.evaluate(prec), vb = b.evaluate(prec);
        Real gap = abs(va - vb);
        Real slack = (abs(va) + abs(vb)) *
                     two_pow(-(static_cast<long>(prec) - 40), prec);
        if (gap > slack) return va > vb ? 1 : -1;
    }
    throw_internal(kModule, "power-product comparison undecidable at working precision");
}

std::string PowProduct::to_string() const {
    if (factors_.empty()) return "1";
    std::ostringstream os;
    bool first = true;
    for (const auto& [b, e] : factors_) {
        if (!first) os << " * ";
        first = false;
        os << b.get_str() << "^(" << e.get_str() << ")";
    }
    return os.str();
}

Real garza_value(const Rat& r_over_d, mpfr_prec_t prec) {
    if (r_over_d <= 0) throw_domain(kModule, "garza ratio must be positive");
    Real x = Real::of(r_over_d, prec);
    Real inv = Real::of(1L, prec) / x; // d/r
    Real a = pow(Real::of(2L, prec), -inv);
    Real b = sqrt(Real::of(1L, prec) + pow(Real::of(4L, prec), -inv));
    return pow(a + b, x / Real::of(2L, prec));
}

BoundExpr BoundExpr::of(PowProduct p) {
    BoundExpr e;
    e.kind_ = Kind::product;
    e.product_ = std::move(p);
    return e;
}

BoundExpr BoundExpr::garza(const Rat& r_over_d) {
    BoundExpr e;
    e.kind_ = Kind::garza;
    e.garza_ratio_ = r_over_d;
    return e;
}

BoundExpr BoundExpr::min_of(std::vector<BoundExpr> parts) {
    if (parts.empty()) throw_domain(kModule, "min of no expressions");
    if (parts.size() == 1) return parts[0];
    BoundExpr e;
    e.kind_ = Kind::min_of;
    e.parts_ = std::move(parts);
    return e;
}

Real BoundExpr::evaluate(mpfr_prec_t prec) const {
    switch (kind_) {
        case Kind::product:
            return product_.evaluate(prec);
        case Kind::garza:
            return garza_value(garza_ratio_, prec);
        case Kind::min_of: {
            Real best = parts_[0].evaluate(prec);
            for (size_t i = 1; i < parts_.size(); ++i) best = min(best, parts_[i].evaluate(prec));
            return best;
        }
    }
    throw_internal(kModule, "unreachable");
}

std::string BoundExpr::to_string() const {
    switch (kind_) {
        case Kind::product:
            return product_.to_string();
        case Kind::garza:
            return "garza(" + garza_ratio_.get_str() + ")";
        case Kind::min_of: {
            std::string s = "min(";
            for (size_t i = 0; i < parts_.size(); ++i) {
                if (i) s += ", ";
                s += parts_[i].to_string();
            }
            return s + ")";
        }
    }
    return "?";
}

bool BoundExpr::structurally_equal(const BoundExpr& o) const {
    if (kind_ != o.kind_) return false;
    switch (kind_) {
        case Kind::product:
            return product_.factors() == o.product_.factors();
        case Kind::garza:
            return garza_ratio_ == o.garza_ratio_;
        case Kind::min_of: {
            if (parts_.size() != o.parts_.size()) return false;
            for (size_t i = 0; i < parts_.size(); ++i)
                if (!parts_[i].structurally_equal(o.parts_[i])) return false;
            return true;
        }
    }
    return false;
}

} // namespace bogocert
