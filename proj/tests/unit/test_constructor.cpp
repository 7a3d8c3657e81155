#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bogocert/constructor.hpp"
#include "bogocert/errors.hpp"
#include "oracles.hpp"

#include <cmath>

using namespace bogocert;

namespace {
FieldPtr Q() { return NumberField::create(IntPoly::x()); }
FieldPtr Qi() { return NumberField::create(IntPoly::parse("x^2+1")); }
} // namespace

TEST_CASE("admissible alpha over Q") {
    AlphaConstruction c5 = construct_alpha(Q(), 5);
    CHECK(c5.alpha.rational_value() == 6); // beta = 1 + 5
    REQUIRE(c5.verification.size() == 1);
    CHECK(c5.verification[0].second == 1);

    AlphaConstruction c3 = construct_alpha(Q(), 3);
    CHECK(c3.alpha.rational_value() == 4);
}

TEST_CASE("admissible alpha over the gaussian field") {
    FieldPtr gauss = Qi();
    AlphaConstruction c = construct_alpha(gauss, 5);
    REQUIRE(c.verification.size() == 2);
    for (const auto& [P, w] : c.verification) CHECK(w == 1);

    // congruent to 1 + pi mod p^2 at each prime
    auto rep = split_prime(gauss, 5);
    for (const auto& P : rep.factors) {
        FieldElement beta = uniformizer(P) + FieldElement::from_rational(gauss, Rat(1));
        FieldElement diff = c.alpha - beta;
        if (!diff.is_zero()) CHECK(valuation(diff, P) >= 2);
    }

    // and the full analysis certifies total ramification
    KummerAnalysis an = check_a1(gauss, c.alpha, 5);
    CHECK(an.conclusion == KummerConclusion::totally_ramified_all);
    CHECK(an.irreducible_certified);

    // inert prime: f = 2
    AlphaConstruction c3 = construct_alpha(gauss, 3);
    REQUIRE(c3.verification.size() == 1);
    CHECK(c3.verification[0].second == 1);
}

TEST_CASE("ramified ell is rejected") {
    CHECK_THROWS_WITH_AS(static_cast<void>(construct_alpha(Qi(), 2)),
                         doctest::Contains("ramifies"), Error);
}

TEST_CASE("construction passes the a=1 check across random quadratic fields") {
    std::mt19937_64 rng(47);
    int done = 0;
    while (done < 20) {
        long m = static_cast<long>(rng() % 40) + 2;
        IntPoly f({-m, 0, 1});
        FieldPtr F;
        try {
            F = NumberField::create(f);
        } catch (const Error&) {
            continue;
        }
        long ells[] = {3, 5, 7};
        Int ell(ells[done % 3]);
        try {
            if (!dedekind_check(F, ell)) continue;
            auto rep = split_prime(F, ell);
            bool unramified = true;
            for (const auto& P : rep.factors)
                if (P.e != 1) unramified = false;
            if (!unramified) continue;
        } catch (const Error&) {
            continue;
        }
        AlphaConstruction c = construct_alpha(F, ell);
        KummerAnalysis an = check_a1(F, c.alpha, ell);
        CHECK(an.conclusion == KummerConclusion::totally_ramified_all);
        CHECK(an.irreducible_certified);
        ++done;
    }
}

TEST_CASE("the 1 + pi element is trivial mod p^2 after raising to ell") {
    // (1 + pi)^ell = 1 mod p^2 when e(p|ell) = 1
    for (long ellv : {3L, 5L, 7L}) {
        FieldPtr gauss = Qi();
        auto rep = split_prime(gauss, ellv);
        for (const auto& P : rep.factors) {
            if (P.e != 1) continue;
            FieldElement beta = uniformizer(P) + FieldElement::from_rational(gauss, Rat(1));
            FieldElement t = beta.pow(ellv) - FieldElement::from_rational(gauss, Rat(1));
            if (!t.is_zero()) CHECK(valuation(t, P) >= 2);
        }
    }
}

TEST_CASE("witness sequences") {
    WitnessSequence seq = nonbog_witnesses(Rat(2), 4, 0);
    REQUIRE(seq.items.size() == 3); // k = 2, 3, 4
    CHECK(seq.items[1].k == 3);
    CHECK(seq.items[1].x == Rat(-5, 24));
    CHECK(seq.items[1].decimal.substr(0, 9) == "0.0866433");
    // strictly decreasing heights
    for (size_t i = 1; i < seq.items.size(); ++i)
        CHECK(std::stod(seq.items[i].decimal) < std::stod(seq.items[i - 1].decimal));

    WitnessSequence eps = nonbog_witnesses(Rat(2), 4, 1e-6);
    CHECK(eps.first_k_below == 20);
    CHECK(eps.items.back().k == 20);
    CHECK(eps.items.back().below_target);

    CHECK_THROWS_AS(static_cast<void>(nonbog_witnesses(Rat(4), 4, 0)), Error);
    CHECK_THROWS_AS(static_cast<void>(nonbog_witnesses(Rat(9, 4), 4, 0)), Error);
    CHECK_THROWS_AS(static_cast<void>(nonbog_witnesses(Rat(1, 2), 4, 0)), Error);
    CHECK_THROWS_AS(static_cast<void>(nonbog_witnesses(Rat(2), 1, 0)), Error);
}

TEST_CASE("witness formula values match the height engine") {
    // h(2^(1/2^k)) computed in the field Q[x]/(x^(2^k) - 2)
    for (int k = 1; k <= 4; ++k) {
        unsigned n = 1u << k;
        FieldPtr F = NumberField::create(IntPoly::binomial(n, 2));
        HeightEstimate h = height(FieldElement::generator(F), 30);
        double expected = std::log(2.0) / n;
        CHECK(std::abs(h.value.to_double() - expected) < 1e-10);
    }
}

TEST_CASE("tower bound values") {
    CHECK(std::abs(tower_bound_42(7).evaluate(192).to_double() - std::pow(1.75, 0.25)) < 1e-9);
    CHECK(std::abs(tower_bound_42(11).evaluate(192).to_double() - std::pow(2.75, 0.25)) < 1e-9);
    CHECK(std::abs(tower_bound_42(19).evaluate(192).to_double() - std::pow(4.75, 0.25)) < 1e-9);
}

TEST_CASE("trinomial tower steps") {
    TowerStep s1 = trinomial_step({}, 12);
    CHECK(s1.index == 1);
    {
        Int b12, b11;
        mpz_ui_pow_ui(b12.get_mpz_t(), 12, 12);
        mpz_ui_pow_ui(b11.get_mpz_t(), 11, 11);
        CHECK(s1.disc == b12 - b11);
        CHECK(s1.formula_disc == s1.disc);
    }
    CHECK(s1.split_prime >= 2);
    // height window: 0 < h <= log2/11
    double h = std::stod(s1.root_height);
    CHECK(h > 0);
    CHECK(h <= std::log(2.0) / 11 + 1e-12);

    CHECK_THROWS_AS(static_cast<void>(trinomial_step({}, 13)), Error);
    CHECK_THROWS_AS(static_cast<void>(trinomial_step({}, 0)), Error);

    // a second candidate is accepted or rejected exactly by the gcd rule
    TowerStep s2 = trinomial_step({}, 24);
    Int g;
    Int a1 = abs(Int(s1.disc)), a2 = abs(Int(s2.disc));
    mpz_gcd(g.get_mpz_t(), a1.get_mpz_t(), a2.get_mpz_t());
    if (g == 1) {
        // compatible: the step builds on the prior tower (the split-prime
        // search against prior steps may exhaust its bound, which is the
        // documented outcome for desk-scale search)
        try {
            TowerStep chained = trinomial_step({s1}, 24);
            CHECK(chained.index == 2);
        } catch (const Error& e) {
            CHECK(e.category() == ErrorCategory::limit);
        }
    } else {
        CHECK_THROWS_AS(static_cast<void>(trinomial_step({s1}, 24)), Error);
    }
}
