#pragma once

#include <string>
#include <vector>

#include "code.hpp"

namespace sympair {

struct BadPrime : std::invalid_argument {
    explicit BadPrime(const std::string& what) : std::invalid_argument(what) {}
};

struct BadCongruence : std::invalid_argument {
    explicit BadCongruence(const std::string& what) : std::invalid_argument(what) {}
};

struct UnknownFamily : std::invalid_argument {
    explicit UnknownFamily(const std::string& name)
        : std::invalid_argument("unknown family: " + name) {}
};

inline const std::vector<std::string>& family_names() {
    static const std::vector<std::string> names = {"thm1", "thm2", "thm3"};
    return names;
}

/// Parameters each family promises: [n, k] with Hamming distance dh and pair
/// distance dp (so every family code sits on the Singleton-type line
/// k = n - dp + 2).
struct FamilyClaim {
    std::size_t n = 0, k = 0;
    u64 dh = 0, dp = 0;
};

namespace detail {

inline PrimeField odd_prime_field(u64 p) {
    if (p < 3 || p % 2 == 0) throw BadPrime("p must be an odd prime");
    try {
        return PrimeField(p);
    } catch (const NotPrime&) {
        throw BadPrime("p must be an odd prime");
    }
}

inline FieldElement fifth_root(const PrimeField& F) {
    if ((F.modulus() - 1) % 5 != 0)
        throw BadCongruence("family needs 5 | (p - 1)");
    return root_of_unity(F, 5);
}

}  // namespace detail

inline FamilyClaim family_claim(const std::string& name, u64 p) {
    detail::odd_prime_field(p);  // parameter validation only
    if (name == "thm1") return {4 * p, 4 * p - 5, 4, 7};
    if (name == "thm2") {
        if ((p - 1) % 5 != 0) throw BadCongruence("family needs 5 | (p - 1)");
        return {5 * p, 5 * p - 5, 4, 7};
    }
    if (name == "thm3") {
        if ((p - 1) % 5 != 0) throw BadCongruence("family needs 5 | (p - 1)");
        return {5 * p, 5 * p - 6, 4, 8};
    }
    throw UnknownFamily(name);
}

/// Construct a family member.
///
/// thm1 (any odd p, length 4p):  g = (x-1)^3 (x-w)(x+w) with w^2 = -1 when
///     p = 1 mod 4, and g = (x-1)^3 (x^2+1) when p = 3 mod 4 (x^2+1 is then
///     irreducible); either way k = 4p-5.
/// thm2 (5 | p-1, length 5p):   g = (x-1)^3 (x-b)(x-b^2), b a primitive
///     fifth root of unity; k = 5p-5.
/// thm3 (5 | p-1, length 5p):   g = (x-1)^3 (x-b)(x-b^2)^2; k = 5p-6.
inline ConstacyclicCode family_code(const std::string& name, u64 p) {
    const PrimeField F = detail::odd_prime_field(p);
    const Polynomial xm1 = Polynomial::x_minus(F.element(1));
    std::vector<FactoredPolynomial::Factor> fs = {{xm1, 3}};

    if (name == "thm1") {
        if (p % 4 == 1) {
            const FieldElement w = root_of_unity(F, 4);
            fs.emplace_back(Polynomial::x_minus(w), 1);
            fs.emplace_back(Polynomial::x_minus(-w), 1);
        } else {
            fs.emplace_back(Polynomial(F, {1, 0, 1}), 1);
        }
        return build_code(F, 4 * p, 1, FactoredPolynomial(F, std::move(fs)));
    }
    if (name == "thm2") {
        const FieldElement b = detail::fifth_root(F);
        fs.emplace_back(Polynomial::x_minus(b), 1);
        fs.emplace_back(Polynomial::x_minus(b * b), 1);
        return build_code(F, 5 * p, 1, FactoredPolynomial(F, std::move(fs)));
    }
    if (name == "thm3") {
        const FieldElement b = detail::fifth_root(F);
        fs.emplace_back(Polynomial::x_minus(b), 1);
        fs.emplace_back(Polynomial::x_minus(b * b), 2);
        return build_code(F, 5 * p, 1, FactoredPolynomial(F, std::move(fs)));
    }
    throw UnknownFamily(name);
}

}  // namespace sympair
