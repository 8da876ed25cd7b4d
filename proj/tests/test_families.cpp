#include <catch2/catch_amalgamated.hpp>

#include "sympair/distance.hpp"
#include "sympair/families.hpp"

using namespace sympair;

TEST_CASE("family registry") {
    REQUIRE(family_names() == std::vector<std::string>{"thm1", "thm2", "thm3"});
    REQUIRE_THROWS_AS(family_code("thm4", 5), UnknownFamily);
    REQUIRE_THROWS_AS(family_claim("thm4", 5), UnknownFamily);
}

TEST_CASE("claimed parameters") {
    const auto c1 = family_claim("thm1", 5);
    REQUIRE(c1.n == 20);
    REQUIRE(c1.k == 15);
    REQUIRE(c1.dh == 4);
    REQUIRE(c1.dp == 7);

    const auto c2 = family_claim("thm2", 11);
    REQUIRE(c2.n == 55);
    REQUIRE(c2.k == 50);
    REQUIRE(c2.dp == 7);

    const auto c3 = family_claim("thm3", 31);
    REQUIRE(c3.n == 155);
    REQUIRE(c3.k == 149);
    REQUIRE(c3.dp == 8);

    // every claim sits on the Singleton-type line k = n - dp + 2
    for (const std::string& name : family_names())
        for (u64 p : {11, 31, 41}) {
            const auto c = family_claim(name, p);
            REQUIRE(c.k == c.n - c.dp + 2);
            REQUIRE(c.dh + 2 <= c.dp);
        }
}

TEST_CASE("pinned generators") {
    SECTION("thm1, p = 5 (1 mod 4): roots of x^2 + 1 are 2 and 3") {
        const auto code = family_code("thm1", 5);
        const PrimeField F(5);
        REQUIRE(code.n() == 20);
        REQUIRE(code.k() == 15);
        REQUIRE(code.eta() == 1);
        const Polynomial expect = Polynomial(F, {-1, 1}) * Polynomial(F, {-1, 1}) *
                                  Polynomial(F, {-1, 1}) * Polynomial(F, {-2, 1}) *
                                  Polynomial(F, {-3, 1});
        REQUIRE(code.generator() == expect);
    }

    SECTION("thm1, p = 3 (3 mod 4): x^2 + 1 stays irreducible") {
        const auto code = family_code("thm1", 3);
        const PrimeField F(3);
        REQUIRE(code.n() == 12);
        REQUIRE(code.k() == 7);
        const Polynomial expect =
            Polynomial(F, {-1, 1}) * Polynomial(F, {-1, 1}) * Polynomial(F, {-1, 1}) *
            Polynomial(F, {1, 0, 1});
        REQUIRE(code.generator() == expect);
    }

    SECTION("thm1, p = 13: smallest primitive fourth root is 5") {
        const auto code = family_code("thm1", 13);
        const PrimeField F(13);
        REQUIRE(code.n() == 52);
        REQUIRE(code.k() == 47);
        // 5^2 = 25 = -1 mod 13; the conjugate root is -5 = 8
        const Polynomial expect = Polynomial(F, {-1, 1}) * Polynomial(F, {-1, 1}) *
                                  Polynomial(F, {-1, 1}) * Polynomial(F, {-5, 1}) *
                                  Polynomial(F, {-8, 1});
        REQUIRE(code.generator() == expect);
    }

    SECTION("thm2, p = 11: beta = 3") {
        const auto code = family_code("thm2", 11);
        const PrimeField F(11);
        REQUIRE(code.n() == 55);
        REQUIRE(code.k() == 50);
        const Polynomial expect = Polynomial(F, {-1, 1}) * Polynomial(F, {-1, 1}) *
                                  Polynomial(F, {-1, 1}) * Polynomial(F, {-3, 1}) *
                                  Polynomial(F, {-9, 1});
        REQUIRE(code.generator() == expect);
    }

    SECTION("thm2/thm3, p = 31: beta = 2") {
        const auto c2 = family_code("thm2", 31);
        const PrimeField F(31);
        REQUIRE(c2.n() == 155);
        REQUIRE(c2.k() == 150);
        const Polynomial lin1 = Polynomial(F, {-1, 1});
        REQUIRE(c2.generator() ==
                lin1 * lin1 * lin1 * Polynomial(F, {-2, 1}) * Polynomial(F, {-4, 1}));

        const auto c3 = family_code("thm3", 31);
        REQUIRE(c3.n() == 155);
        REQUIRE(c3.k() == 149);
        REQUIRE(c3.generator() == lin1 * lin1 * lin1 * Polynomial(F, {-2, 1}) *
                                      Polynomial(F, {-4, 1}) * Polynomial(F, {-4, 1}));
    }

    SECTION("thm3, p = 11: the squared factor") {
        const auto code = family_code("thm3", 11);
        REQUIRE(code.n() == 55);
        REQUIRE(code.k() == 49);
        bool squared = false;
        for (const auto& [m, e] : code.factors().factors())
            if (m == Polynomial(PrimeField(11), {-9, 1})) squared = (e == 2);
        REQUIRE(squared);
    }
}

TEST_CASE("family codes match their claimed shape and Hamming distance") {
    struct Row {
        const char* name;
        u64 p;
    };
    const std::vector<Row> rows = {{"thm1", 3},  {"thm1", 5},  {"thm1", 7},
                                   {"thm1", 13}, {"thm2", 11}, {"thm2", 31},
                                   {"thm3", 11}, {"thm3", 31}};
    for (const auto& row : rows) {
        const auto claim = family_claim(row.name, row.p);
        const auto code = family_code(row.name, row.p);
        REQUIRE(code.n() == claim.n);
        REQUIRE(code.k() == claim.k);
        REQUIRE(code.eta() == 1);
        REQUIRE(code.e() == 1);
        const auto cert = dh_repeated_root(code);
        REQUIRE(cert.dh == claim.dh);
        const Codeword w = min_weight_codeword(code, cert);
        REQUIRE(w.weight() == claim.dh);
    }
}

TEST_CASE("parameter validation order: primality, then congruence") {
    REQUIRE_THROWS_AS(family_code("thm1", 2), BadPrime);
    REQUIRE_THROWS_AS(family_code("thm1", 9), BadPrime);
    REQUIRE_THROWS_AS(family_code("thm1", 0), BadPrime);
    REQUIRE_THROWS_AS(family_code("thm2", 9), BadPrime);   // nonprime reported first
    REQUIRE_THROWS_AS(family_code("thm2", 7), BadCongruence);
    REQUIRE_THROWS_AS(family_code("thm2", 5), BadCongruence);  // 5 does not divide 4
    REQUIRE_THROWS_AS(family_code("thm3", 13), BadCongruence);
    REQUIRE_THROWS_AS(family_claim("thm2", 7), BadCongruence);
    REQUIRE_THROWS_AS(family_claim("thm3", 2), BadPrime);

    // congruence-satisfying primes construct fine
    REQUIRE(family_code("thm2", 41).k() == 200);
    REQUIRE(family_code("thm3", 41).k() == 199);
}
