#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bogocert/errors.hpp"
#include "bogocert/hensel.hpp"
#include "bogocert/modpoly.hpp"
#include "oracles.hpp"

using namespace bogocert;
namespace oracle = bogocert::testing;

TEST_CASE("two linear blocks over 5 at k=2") {
    IntPoly f = IntPoly::parse("x^2+1");
    auto lifted = hensel_lift_blocks(f, {IntPoly::parse("x+2"), IntPoly::parse("x+3")}, 5, 2);
    REQUIRE(lifted.size() == 2);
    CHECK(lifted[0] == IntPoly::parse("x+7"));
    CHECK(lifted[1] == IntPoly::parse("x+18"));
    CHECK(poly_mod(lifted[0] * lifted[1] - f, 25).is_zero());
}

TEST_CASE("identity at base precision and single inseparable block") {
    IntPoly f = IntPoly::parse("x^2+1");
    auto same = hensel_lift_blocks(f, {IntPoly::parse("x+2"), IntPoly::parse("x+3")}, 5, 1);
    CHECK(same[0] == IntPoly::parse("x+2"));
    CHECK(same[1] == IntPoly::parse("x+3"));

    IntPoly g = IntPoly::parse("x^3-2");
    // the single block is (x+1)^3 mod 3; lifting returns f mod 3^4
    auto block = hensel_lift_blocks(g, {IntPoly::parse("x^3+3x^2+3x+1")}, 3, 4);
    REQUIRE(block.size() == 1);
    CHECK(block[0] == poly_mod(g, 81));
}

TEST_CASE("non-coprime blocks rejected") {
    IntPoly f = IntPoly::parse("x^2+2x+1");
    CHECK_THROWS_AS(hensel_lift_blocks(f, {IntPoly::parse("x+1"), IntPoly::parse("x+1")}, 5, 3),
                    Error);
    // mismatched product
    CHECK_THROWS_AS(
        hensel_lift_blocks(IntPoly::parse("x^2+1"), {IntPoly::parse("x+1"), IntPoly::parse("x+3")},
                           5, 3),
        Error);
}

TEST_CASE("re-multiplication matches f mod ell^k up to k = 64") {
    std::mt19937_64 rng(1001);
    const long primes[] = {2, 3, 5, 7, 13};
    const unsigned ks[] = {2, 4, 8, 16, 32, 64};
    int done = 0;
    while (done < 60) {
        Int p(primes[rng() % 5]);
        // assemble f from random monic factors that are pairwise coprime mod p
        int parts = 2 + static_cast<int>(rng() % 3);
        std::vector<IntPoly> blocks;
        IntPoly f({1});
        for (int i = 0; i < parts; ++i) {
            IntPoly g = oracle::random_poly(rng, 1 + static_cast<int>(rng() % 3), 50, true);
            blocks.push_back(poly_mod(g, p));
            f = f * g;
        }
        bool coprime = true;
        for (size_t i = 0; i < blocks.size() && coprime; ++i) {
            for (size_t j = i + 1; j < blocks.size() && coprime; ++j)
                if (ModPoly::gcd(ModPoly::reduce(blocks[i], p), ModPoly::reduce(blocks[j], p))
                        .degree() != 0)
                    coprime = false;
        }
        for (const auto& b : blocks)
            if (ModPoly::reduce(b, p).degree() < 1) coprime = false;
        if (!coprime) continue;

        unsigned k = ks[rng() % 6];
        auto lifted = hensel_lift_blocks(f, blocks, p, k);
        Int modulus = int_pow(p, k);
        IntPoly prod({1});
        for (const auto& g : lifted) {
            CHECK(g.is_monic());
            prod = poly_mod(prod * g, modulus);
        }
        CHECK(prod == poly_mod(f, modulus));
        for (size_t i = 0; i < blocks.size(); ++i)
            CHECK(poly_mod(lifted[i] - blocks[i], p).is_zero());
        ++done;
    }
}
