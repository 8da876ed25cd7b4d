#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>
#include <vector>

#include "sympair/distance.hpp"

using namespace sympair;

namespace {

FactoredPolynomial lin_factors(const PrimeField& F,
                               std::vector<std::pair<i64, u64>> root_mults) {
    std::vector<FactoredPolynomial::Factor> fs;
    for (auto& [a, e] : root_mults)
        fs.emplace_back(Polynomial::x_minus(F.element(a)), e);
    return FactoredPolynomial(F, std::move(fs));
}

/// Random divisor of x^n - 1 with p^k below cap, as a code.
ConstacyclicCode random_subcode(const PrimeField& F, std::size_t n,
                                std::mt19937_64& rng, u64 cap) {
    const Polynomial mod = Polynomial::monomial(F, n) - Polynomial::one(F);
    const FactoredPolynomial full = factorize(mod);
    for (;;) {
        std::vector<FactoredPolynomial::Factor> fs;
        u64 deg = 0;
        for (const auto& [m, e] : full.factors()) {
            const u64 pick = rng() % (e + 1);
            if (pick) {
                fs.emplace_back(m, pick);
                deg += pick * static_cast<u64>(m.degree());
            }
        }
        if (deg == n) continue;  // k = 0: not useful for oracle comparisons
        u128 size = 1;
        bool ok = true;
        for (u64 i = 0; i < n - deg && ok; ++i) {
            size *= F.modulus();
            if (size > cap) ok = false;
        }
        if (!ok) continue;
        return build_code(F, n, 1, FactoredPolynomial(F, std::move(fs)));
    }
}

std::vector<u64> products_of(const DistanceCertificate& cert) {
    std::vector<u64> r;
    for (const auto& lv : cert.per_level) r.push_back(lv.product);
    return r;
}

}  // namespace

TEST_CASE("radix weight: product of incremented base-p digits") {
    REQUIRE(radix_weight(0, 5) == 1);
    REQUIRE(radix_weight(2, 5) == 3);
    REQUIRE(radix_weight(7, 5) == 6);   // 7 = (1,2)_5 -> 2 * 3
    REQUIRE(radix_weight(5, 5) == 2);   // (1,0)_5 -> 2 * 1
    REQUIRE(radix_weight(24, 5) == 25); // (4,4)_5 -> 5 * 5
    REQUIRE(radix_weight(31, 2) == 32); // (1,1,1,1,1)_2
    REQUIRE(radix_weight(4, 3) == 4);   // (1,1)_3 -> 2 * 2

    SECTION("equals the weight of (x-1)^t, for all t < p^2") {
        for (u64 p : {2, 3, 5, 7}) {
            const PrimeField F(p);
            const Polynomial xm1 = Polynomial(F, {-1, 1});
            Polynomial pow = Polynomial::one(F);
            for (u64 t = 0; t < p * p; ++t) {
                REQUIRE(radix_weight(t, p) == pow.weight());
                pow = pow * xm1;
            }
        }
    }
}

TEST_CASE("quotient codes at each level") {
    const PrimeField F(5);
    const auto code = build_code(F, 20, 1, lin_factors(F, {{1, 3}, {2, 1}, {3, 1}}));

    const BarCode b0 = bar_code(code, 0);
    REQUIRE(b0.code.n() == 4);
    REQUIRE(b0.code.generator() ==
            Polynomial::x_minus(F.element(1)) * Polynomial::x_minus(F.element(2)) *
                Polynomial::x_minus(F.element(3)));
    REQUIRE(b0.code.k() == 1);

    const BarCode b1 = bar_code(code, 1);
    REQUIRE(b1.code.generator() == Polynomial(F, {-1, 1}));
    REQUIRE(bar_code(code, 2).code.generator() == b1.code.generator());

    REQUIRE(bar_code(code, 3).code.generator().is_one());
    REQUIRE(bar_code(code, 7).code.generator().is_one());

    const auto nega = build_code(F, 4, -1, FactoredPolynomial(F, {{Polynomial(F, {2, 0, 1}), 1}}));
    REQUIRE_THROWS_AS(bar_code(nega, 0), NotCyclic);
}

TEST_CASE("quotient distances: pinned values") {
    const PrimeField F5(5);
    const auto thm1 = build_code(F5, 20, 1, lin_factors(F5, {{1, 3}, {2, 1}, {3, 1}}));

    // (x-1)(x-2)(x-3) = x^3 + 4x^2 + x + 4 over F_5: a one-dimensional code
    // whose only nonzero words are scalings of the generator, weight 4.
    Polynomial w(F5);
    REQUIRE(bar_distance(bar_code(thm1, 0), &w) == 4);
    REQUIRE(w.weight() == 4);
    REQUIRE(bar_code(thm1, 0).code.contains(Codeword::from_polynomial(w, 4)));

    REQUIRE(bar_distance(bar_code(thm1, 1)) == 2);
    REQUIRE(bar_distance(bar_code(thm1, 3)) == 1);

    // Quotient generated by x^l - 1 itself is the zero code.
    const PrimeField F3(3);
    const auto tiny = build_code(F3, 3, 1, lin_factors(F3, {{1, 1}}));
    REQUIRE(bar_distance(bar_code(tiny, 0)) == kInfiniteDistance);
    REQUIRE(bar_distance(bar_code(tiny, 1)) == 1);
}

TEST_CASE("direct minimum distance: exhaustive and support-scan paths agree") {
    std::mt19937_64 rng(0xd15c0);
    for (u64 p : {2, 3, 5}) {
        const PrimeField F(p);
        const std::vector<std::size_t> lens =
            p == 2 ? std::vector<std::size_t>{4, 6, 8, 12}
                   : (p == 3 ? std::vector<std::size_t>{3, 6, 9, 12}
                             : std::vector<std::size_t>{5, 10, 15});
        for (int it = 0; it < 12; ++it) {
            const std::size_t n = lens[rng() % lens.size()];
            const auto code = random_subcode(F, n, rng, 100'000);
            Polynomial we(F), ws(F);
            const u64 de = min_hamming_distance_direct(code, &we);      // exhaustive
            const u64 ds = min_hamming_distance_direct(code, &ws, 0);   // support scan
            REQUIRE(de == ds);
            REQUIRE(we.weight() == de);
            REQUIRE(ws.weight() == de);
            REQUIRE(code.contains(Codeword::from_polynomial(we, n)));
            REQUIRE(code.contains(Codeword::from_polynomial(ws, n)));
        }
    }
}

TEST_CASE("codeword enumeration: every nonzero codeword exactly once") {
    const PrimeField F(3);
    const auto code = build_code(F, 6, 1, lin_factors(F, {{1, 2}}));
    std::set<std::vector<u64>> seen;
    for_each_codeword(code, [&](const std::vector<u64>& v, std::size_t w) {
        std::size_t nz = 0;
        for (u64 x : v) nz += (x != 0);
        REQUIRE(w == nz);
        REQUIRE(w > 0);
        REQUIRE(code.contains(Codeword::from_residues(F, v)));
        seen.insert(v);
    });
    REQUIRE(seen.size() == 80);  // 3^4 - 1
}

TEST_CASE("repeated-root minimum distance: pinned certificates") {
    SECTION("length 20 over F_5") {
        const PrimeField F(5);
        const auto code = build_code(F, 20, 1, lin_factors(F, {{1, 3}, {2, 1}, {3, 1}}));
        const auto cert = dh_repeated_root(code);
        REQUIRE(cert.dh == 4);
        REQUIRE(cert.witness_t == 0);
        REQUIRE(cert.per_level.size() == 5);
        REQUIRE(products_of(cert) == std::vector<u64>{4, 4, 6, 4, 5});
        const std::vector<u64> pts = {1, 2, 3, 4, 5}, bars = {4, 2, 2, 1, 1};
        for (std::size_t t = 0; t < 5; ++t) {
            REQUIRE(cert.per_level[t].t == t);
            REQUIRE(cert.per_level[t].pt == pts[t]);
            REQUIRE(cert.per_level[t].dh_bar == bars[t]);
        }
    }

    SECTION("the smallest repeated-root code: x - 1 at length 3 over F_3") {
        const PrimeField F(3);
        const auto code = build_code(F, 3, 1, lin_factors(F, {{1, 1}}));
        const auto cert = dh_repeated_root(code);
        REQUIRE(cert.dh == 2);
        REQUIRE(cert.witness_t == 1);
        REQUIRE(products_of(cert) == std::vector<u64>{kInfiniteDistance, 2, 3});
    }

    SECTION("lengths 55 over F_11: both five-root generators") {
        const PrimeField F(11);
        // beta = 3 has multiplicative order 5
        const auto c2 = build_code(F, 55, 1, lin_factors(F, {{1, 3}, {3, 1}, {9, 1}}));
        const auto cert2 = dh_repeated_root(c2);
        REQUIRE(cert2.dh == 4);
        REQUIRE(cert2.witness_t == 0);
        REQUIRE(cert2.per_level.size() == 11);
        REQUIRE(cert2.per_level[0].dh_bar == 4);
        REQUIRE(cert2.per_level[1].product == 4);

        const auto c3 = build_code(F, 55, 1, lin_factors(F, {{1, 3}, {3, 1}, {9, 2}}));
        const auto cert3 = dh_repeated_root(c3);
        REQUIRE(cert3.dh == 4);
        REQUIRE(cert3.witness_t == 0);
        // roots {1, 9} leave a [5,3] quotient of distance 3
        REQUIRE(cert3.per_level[1].dh_bar == 3);
        REQUIRE(cert3.per_level[2].dh_bar == 2);
    }

    SECTION("the full ambient space (g = 1) has distance 1") {
        const PrimeField F(3);
        const auto code = build_code(F, 9, 1, FactoredPolynomial(F, {}));
        const auto cert = dh_repeated_root(code);
        REQUIRE(cert.dh == 1);
        REQUIRE(cert.witness_t == 0);
    }

    SECTION("the zero code (g = x^n - 1) has no distance") {
        const PrimeField F(3);
        const auto code = build_code(F, 3, 1, lin_factors(F, {{1, 3}}));
        const auto cert = dh_repeated_root(code);
        REQUIRE(cert.dh == kInfiniteDistance);
        REQUIRE(dh_bruteforce(code) == kInfiniteDistance);
    }

    SECTION("preconditions") {
        const PrimeField F(5);
        const auto nega =
            build_code(F, 4, -1, FactoredPolynomial(F, {{Polynomial(F, {2, 0, 1}), 1}}));
        REQUIRE_THROWS_AS(dh_repeated_root(nega), NotCyclic);
        const auto simple = build_code(F, 4, 1, lin_factors(F, {{1, 1}}));
        REQUIRE_THROWS_AS(dh_repeated_root(simple), SimpleRoot);
    }
}

TEST_CASE("repeated-root distance agrees with brute force") {
    std::mt19937_64 rng(0x0b5e55);
    for (u64 p : {2, 3, 5}) {
        const PrimeField F(p);
        const std::vector<std::size_t> lens =
            p == 2 ? std::vector<std::size_t>{4, 6, 8, 12}
                   : (p == 3 ? std::vector<std::size_t>{3, 6, 9, 12}
                             : std::vector<std::size_t>{5, 10, 20});
        for (int it = 0; it < 15; ++it) {
            const std::size_t n = lens[rng() % lens.size()];
            const auto code = random_subcode(F, n, rng, 200'000);
            const auto cert = dh_repeated_root(code);
            REQUIRE(cert.dh == dh_bruteforce(code));
            const Codeword w = min_weight_codeword(code, cert);
            REQUIRE(w.weight() == cert.dh);
            REQUIRE(code.contains(w));
        }
    }
}

TEST_CASE("weight decomposition c = (x^l - 1)^t v") {
    const PrimeField F(11);
    const auto code = build_code(F, 55, 1, lin_factors(F, {{1, 3}, {3, 1}, {9, 1}}));
    const Polynomial xl1 = Polynomial::monomial(F, 5) - Polynomial::one(F);

    SECTION("pinned") {
        const auto d1 = weight_decomposition(code, Codeword::from_polynomial(xl1, 55));
        REQUIRE(d1.t == 1);
        REQUIRE(d1.v.is_one());
        REQUIRE(d1.nv == 1);

        const Polynomial c = Polynomial::monomial(F, 1) * xl1 * xl1 * xl1;
        const auto d3 = weight_decomposition(code, Codeword::from_polynomial(c, 55));
        REQUIRE(d3.t == 3);
        REQUIRE(d3.v == Polynomial::monomial(F, 1));
        REQUIRE(d3.nv == 1);
    }

    SECTION("round trip, divisibility, and the level lower bound on codewords") {
        std::mt19937_64 rng(0xdec0);
        for (int it = 0; it < 150; ++it) {
            std::vector<i64> m(code.k());
            for (auto& x : m) x = static_cast<i64>(rng() % 11);
            const Codeword c = encode(code, FpVector(F, m));
            if (c.is_zero()) continue;
            const auto d = weight_decomposition(code, c);
            Polynomial rebuilt = d.v;
            for (u64 i = 0; i < d.t; ++i) rebuilt = rebuilt * xl1;
            REQUIRE(rebuilt == c.to_polynomial());
            REQUIRE(!poly_divmod(d.v, xl1).second.is_zero());
            REQUIRE(d.nv >= 1);
            // weight never beats the level product
            REQUIRE(c.weight() >= radix_weight(d.t, 11) * d.nv);
        }
    }

    SECTION("errors") {
        REQUIRE_THROWS_AS(weight_decomposition(code, Codeword(F, 55)), ZeroCodeword);
        REQUIRE_THROWS_AS(weight_decomposition(code, Codeword(F, 54)), LengthMismatch);
        REQUIRE_THROWS_AS(
            weight_decomposition(code, Codeword(PrimeField(5), 55)), FieldMismatch);
    }
}

TEST_CASE("minimum-weight witness for the pinned codes") {
    struct Case {
        u64 p;
        std::size_t n;
        std::vector<std::pair<i64, u64>> roots;
        u64 dh;
    };
    const std::vector<Case> cases = {
        {5, 20, {{1, 3}, {2, 1}, {3, 1}}, 4},
        {11, 55, {{1, 3}, {3, 1}, {9, 1}}, 4},
        {11, 55, {{1, 3}, {3, 1}, {9, 2}}, 4},
        {3, 3, {{1, 1}}, 2},
    };
    for (const auto& cs : cases) {
        const PrimeField F(cs.p);
        const auto code = build_code(F, cs.n, 1, lin_factors(F, cs.roots));
        const auto cert = dh_repeated_root(code);
        REQUIRE(cert.dh == cs.dh);
        const Codeword w = min_weight_codeword(code, cert);
        REQUIRE(code.contains(w));
        REQUIRE(w.weight() == cs.dh);
    }
}

TEST_CASE("brute-force distance guards its enumeration size") {
    const PrimeField F(31);
    const auto big = build_code(F, 155, 1, lin_factors(F, {{1, 3}, {2, 1}, {4, 2}}));
    REQUIRE_THROWS_AS(dh_bruteforce(big), TooLarge);
}

TEST_CASE("the distance dispatcher picks a correct engine for every shape") {
    const PrimeField F(5);

    // eta != 1: direct engine
    const auto nega =
        build_code(F, 4, -1, FactoredPolynomial(F, {{Polynomial(F, {2, 0, 1}), 1}}));
    REQUIRE(min_hamming_distance(nega) == 2);
    REQUIRE(min_hamming_distance(nega) == dh_bruteforce(nega));

    // simple-root cyclic: direct engine
    const auto simple = build_code(F, 4, 1, lin_factors(F, {{1, 1}, {2, 1}}));
    REQUIRE(min_hamming_distance(simple) == dh_bruteforce(simple));

    // repeated root: level formula
    const auto rep = build_code(F, 20, 1, lin_factors(F, {{1, 3}, {2, 1}, {3, 1}}));
    REQUIRE(min_hamming_distance(rep) == 4);

    // zero code
    const PrimeField F3(3);
    REQUIRE(min_hamming_distance(build_code(F3, 3, 1, lin_factors(F3, {{1, 3}}))) ==
            kInfiniteDistance);
}
