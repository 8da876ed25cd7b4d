#pragma once

#include <utility>

#include "polynomials.hpp"
#include "vectors.hpp"

namespace sympair {

struct NotADivisor : std::invalid_argument {
    NotADivisor() : std::invalid_argument("generator does not divide x^n - eta") {}
};

using Codeword = FpVector;

/// Constacyclic code of length n over F_p with shift constant eta: the ideal
/// generated by g(x) in F_p[x]/(x^n - eta), where g | x^n - eta.  The
/// generator is kept in factored form; n = l * p^e with gcd(l, p) = 1.
class ConstacyclicCode {
public:
    ConstacyclicCode(const PrimeField& f, std::size_t n, i64 eta, FactoredPolynomial factors)
        : field_(f),
          n_(n),
          eta_(f.reduce(eta)),
          factors_(std::move(factors)),
          gen_(factors_.expand()) {
        if (n_ == 0) throw BadLength("code length must be positive");
        if (factors_.field() != field_) throw FieldMismatch();
        if (eta_ == 0) throw std::invalid_argument("eta must be a unit");
        if (!divides(gen_, modulus_poly())) throw NotADivisor();
        k_ = n_ - static_cast<std::size_t>(gen_.degree());
        l_ = n_;
        e_ = 0;
        const u64 p = field_.modulus();
        while (l_ % p == 0) {
            l_ /= p;
            ++e_;
        }
    }

    const PrimeField& field() const { return field_; }
    std::size_t n() const { return n_; }
    std::size_t k() const { return k_; }
    u64 eta() const { return eta_; }
    const FactoredPolynomial& factors() const { return factors_; }
    const Polynomial& generator() const { return gen_; }

    /// n = l * p^e with gcd(l, p) = 1
    std::size_t l() const { return l_; }
    u64 e() const { return e_; }

    /// x^n - eta
    Polynomial modulus_poly() const {
        return Polynomial::monomial(field_, n_) -
               Polynomial::from_residues(field_, {eta_});
    }

    /// Membership: a length-n word lies in the ideal iff g divides it as a
    /// polynomial (degrees below n need no reduction).
    bool contains(const Codeword& w) const {
        if (w.field() != field_) throw FieldMismatch();
        if (w.size() != n_) throw LengthMismatch();
        return poly_divmod(w.to_polynomial(), gen_).second.is_zero();
    }

    bool operator==(const ConstacyclicCode& o) const {
        return field_ == o.field_ && n_ == o.n_ && eta_ == o.eta_ && gen_ == o.gen_;
    }
    bool operator!=(const ConstacyclicCode& o) const { return !(*this == o); }

private:
    PrimeField field_;
    std::size_t n_;
    u64 eta_;
    FactoredPolynomial factors_;
    Polynomial gen_;
    std::size_t k_, l_;
    u64 e_;
};

inline ConstacyclicCode build_code(const PrimeField& f, std::size_t n, i64 eta,
                                   FactoredPolynomial factors) {
    return ConstacyclicCode(f, n, eta, std::move(factors));
}

/// message (length k) -> message(x) * g(x) mod (x^n - eta), as a length-n word
inline Codeword encode(const ConstacyclicCode& code, const FpVector& message) {
    if (message.field() != code.field()) throw FieldMismatch();
    if (message.size() != code.k()) throw LengthMismatch();
    const Polynomial prod = message.to_polynomial() * code.generator();
    const Polynomial reduced = poly_divmod(prod, code.modulus_poly()).second;
    return Codeword::from_polynomial(reduced, code.n());
}

/// (x_0, ..., x_{n-1}) -> (eta * x_{n-1}, x_0, ..., x_{n-2})
inline FpVector constacyclic_shift(const ConstacyclicCode& code, const FpVector& x) {
    if (x.field() != code.field()) throw FieldMismatch();
    if (x.size() != code.n()) throw LengthMismatch();
    const std::size_t n = x.size();
    FpVector y(x.field(), n);
    y.set_residue(0, x.field().mul(code.eta(), x.raw(n - 1)));
    for (std::size_t i = 1; i < n; ++i) y.set_residue(i, x.raw(i - 1));
    return y;
}

}  // namespace sympair
