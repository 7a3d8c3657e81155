#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bogocert/errors.hpp"
#include "bogocert/kummer.hpp"
#include "oracles.hpp"

#include <cmath>

using namespace bogocert;

namespace {
FieldPtr Q() { return NumberField::create(IntPoly::x()); }
FieldPtr Qi() { return NumberField::create(IntPoly::parse("x^2+1")); }

FieldElement q_elem(const FieldPtr& F, long v) {
    return FieldElement::from_rational(F, Rat(v));
}

unsigned long v_ell(const Int& n, const Int& ell) {
    Int tmp, a = abs(n);
    return mpz_remove(tmp.get_mpz_t(), a.get_mpz_t(), ell.get_mpz_t());
}
} // namespace

TEST_CASE("a-invariant stock values over Q") {
    FieldPtr q = Q();
    auto rep3 = split_prime(q, 3);
    auto rec = a_invariant(q_elem(q, 2), 3, rep3.factors[0]);
    CHECK(rec.a == 1);
    CHECK(rec.w == 1);
    CHECK(rec.shortcut);

    auto rep5 = split_prime(q, 5);
    rec = a_invariant(q_elem(q, 7), 5, rep5.factors[0]);
    CHECK(rec.a == 2); // v_5(7^4 - 1) = v_5(2400) = 2
    CHECK(rec.w == 2);

    rec = a_invariant(q_elem(q, 2), 5, rep5.factors[0]);
    CHECK(rec.a == 1);

    // monotonicity: a >= 1 always (x = alpha^(ell^(f-1)) solves k = 1)
    for (long alpha : {2, 3, 4, 6, 7, 8, 9, 11}) {
        if (alpha % 5 == 0) continue;
        auto r = a_invariant(q_elem(q, alpha), 5, rep5.factors[0]);
        CHECK(r.a >= 1);
    }
}

TEST_CASE("a-invariant preconditions") {
    FieldPtr q = Q();
    auto rep5 = split_prime(q, 5);
    CHECK_THROWS_WITH_AS(static_cast<void>(a_invariant(q_elem(q, 10), 5, rep5.factors[0])),
                         doctest::Contains("coprime"), Error);
    CHECK_THROWS_AS(static_cast<void>(a_invariant(q_elem(q, 0), 5, rep5.factors[0])), Error);
    CHECK_THROWS_AS(
        static_cast<void>(a_invariant(FieldElement::from_rational(q, Rat(1, 5)), 5, rep5.factors[0])),
        Error);
}

TEST_CASE("shortcut agrees with brute force including residue degree two") {
    FieldPtr gauss = Qi();
    auto rep3 = split_prime(gauss, 3); // inert, f = 2
    auto rec = a_invariant(FieldElement::from_rational(gauss, Rat(4)), 3, rep3.factors[0]);
    CHECK(rec.w == 1); // v_3(4^8 - 1) = v_3(65535) = 1
    CHECK(rec.a == 1);

    // direct solvability probes
    CHECK(lth_power_solvable_mod_pk(FieldElement::from_rational(gauss, Rat(4)), 3,
                                    rep3.factors[0], 1));
    CHECK_FALSE(lth_power_solvable_mod_pk(FieldElement::from_rational(gauss, Rat(4)), 3,
                                          rep3.factors[0], 2));

    // over Q: x^5 = 7 solvable mod 25 but not mod 125 (w = 2)
    FieldPtr q = Q();
    auto rep5 = split_prime(q, 5);
    CHECK(lth_power_solvable_mod_pk(q_elem(q, 7), 5, rep5.factors[0], 2));
    CHECK_FALSE(lth_power_solvable_mod_pk(q_elem(q, 7), 5, rep5.factors[0], 3));
}

TEST_CASE("brute-force branch when the shortcut window fails") {
    // ell = 2, alpha = 17: w = v_2(17 - 1) = 4 >= ell + 1, forcing the search;
    // 17 = 1 mod 8 is a 2-adic square so solvability persists and the
    // enumeration cap must fire
    FieldPtr q = Q();
    auto rep2 = split_prime(q, 2);
    CHECK_THROWS_WITH_AS(static_cast<void>(a_invariant(q_elem(q, 17), 2, rep2.factors[0])),
                         doctest::Contains("10^6"), Error);
    // ell = 2, alpha = 5: w = 2 = ell, the gap rule still pins a = w
    auto rec = a_invariant(q_elem(q, 5), 2, rep2.factors[0]);
    CHECK(rec.a == 2);
    // brute-force confirmation: x^2 = 5 solvable mod 4, not mod 8
    CHECK(lth_power_solvable_mod_pk(q_elem(q, 5), 2, rep2.factors[0], 2));
    CHECK_FALSE(lth_power_solvable_mod_pk(q_elem(q, 5), 2, rep2.factors[0], 3));
}

TEST_CASE("divisibility conclusion (acond)") {
    FieldPtr q = Q();
    auto an = check_acolem(q, q_elem(q, 2), 5, Rat(3, 4));
    CHECK(an.conclusion == KummerConclusion::divides);
    CHECK(an.divides_exponent == 4); // ceil(15/4)

    auto bad = check_acolem(q, q_elem(q, 10), 3, Rat(3, 4));
    CHECK(bad.conclusion == KummerConclusion::inconclusive); // v_3(99) = 2 > 1.75

    auto half = check_acolem(q, q_elem(q, 2), 7, Rat(1, 2));
    CHECK(half.conclusion == KummerConclusion::divides);
    CHECK(half.divides_exponent == 4); // ceil(7/2)

    CHECK_THROWS_AS(static_cast<void>(check_acolem(q, q_elem(q, 2), 5, Rat(1, 4))), Error);
    CHECK_THROWS_AS(static_cast<void>(check_acolem(q, q_elem(q, 2), 5, Rat(1))), Error);
}

TEST_CASE("total ramification certificates (a = 1)") {
    FieldPtr q = Q();
    auto an = check_a1(q, q_elem(q, 2), 5);
    CHECK(an.conclusion == KummerConclusion::totally_ramified_all);
    CHECK(an.divides_exponent == 5);
    CHECK(an.irreducible_certified);
    CHECK(v_ell(poly_discriminant(IntPoly::binomial(5, 2)), 5) == 5);

    auto fail = check_a1(q, q_elem(q, 7), 5);
    CHECK(fail.conclusion == KummerConclusion::inconclusive);
    CHECK_FALSE(fail.irreducible_certified);
}

TEST_CASE("hecke consistency: v_ell(disc(x^ell - alpha)) = ell when a = 1") {
    FieldPtr q = Q();
    for (long ellv : {3L, 5L, 7L}) {
        Int ell(ellv);
        for (long alpha = 2; alpha <= 20; ++alpha) {
            if (alpha % ellv == 0) continue;
            auto an = check_a1(q, q_elem(q, alpha), ellv);
            if (an.conclusion != KummerConclusion::totally_ramified_all) continue;
            Int disc = poly_discriminant(IntPoly::binomial(static_cast<unsigned>(ellv), alpha));
            CHECK(v_ell(disc, ell) == static_cast<unsigned long>(ellv));
        }
    }
}

TEST_CASE("hecke local exponent formula") {
    // (ell-1)(ell e/(ell-1) + 1 - a); with e = ell - 1, a = 1 this is ell(ell-1)
    CHECK(hecke_disc_valuation(4, 1, 5) == 20);
    CHECK(hecke_disc_valuation(4, 2, 5) == 16);
    CHECK(hecke_disc_valuation(2, 1, 3) == 6);
    CHECK_THROWS_AS(static_cast<void>(hecke_disc_valuation(3, 1, 5)), Error);
}

TEST_CASE("threshold scan for the height-vs-ramification inequality") {
    // h = 0: the condition d log2/log(l) <= 1 + l(1-rho) already holds at 2
    auto t0 = corollary_v_threshold(1, 0.0, Rat(3, 4));
    CHECK(t0.c == 2);
    CHECK(t0.certified);

    // d = 1, h = log 2, rho = 3/4: fails at 2 and 3, holds from 5 on
    auto t1 = corollary_v_threshold(1, std::log(2.0), Rat(3, 4));
    CHECK(t1.c == 5);
    CHECK(t1.certified);
    {
        // independent monotone-scan oracle around the reported threshold
        auto holds = [&](long ell) {
            double L = std::log(static_cast<double>(ell));
            double lhs = std::log(2.0) / L + (ell - 1) * std::log(2.0) / L;
            double rhs = 1 + ell * 0.25;
            return lhs <= rhs;
        };
        CHECK_FALSE(holds(3));
        for (long ell : {5L, 7L, 11L, 13L, 17L, 19L, 23L}) CHECK(holds(ell));
    }

    // d = 2, h = log 3, rho = 1/2: cross-check against direct evaluation
    auto t2 = corollary_v_threshold(2, std::log(3.0), Rat(1, 2));
    CHECK(t2.certified);
    {
        auto holds = [&](long ell) {
            double L = std::log(static_cast<double>(ell));
            double lhs = 2 * std::log(2.0) / L + (ell - 1) * 2 * std::log(3.0) / L;
            double rhs = 1 + ell * 0.5;
            return lhs <= rhs;
        };
        long c = t2.c.get_si();
        // the prime right below c must fail, c and the next few must hold
        Int below = c - 1;
        while (mpz_probab_prime_p(below.get_mpz_t(), 30) == 0) below -= 1;
        CHECK_FALSE(holds(below.get_si()));
        Int p = c - 1;
        for (int i = 0; i < 10; ++i) {
            mpz_nextprime(p.get_mpz_t(), p.get_mpz_t());
            CHECK(holds(p.get_si()));
        }
    }

    CHECK_THROWS_AS(static_cast<void>(corollary_v_threshold(1, -0.5, Rat(3, 4))), Error);
    CHECK_THROWS_AS(static_cast<void>(corollary_v_threshold(1, 0.5, Rat(1))), Error);
}
