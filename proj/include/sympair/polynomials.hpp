#pragma once

#include <algorithm>
#include <initializer_list>
#include <ostream>
#include <utility>
#include <vector>

#include "fields.hpp"

namespace sympair {

struct DivisionByZeroPoly : std::domain_error {
    DivisionByZeroPoly() : std::domain_error("polynomial division by zero") {}
};

struct NotMonic : std::invalid_argument {
    NotMonic() : std::invalid_argument("polynomial is not monic") {}
};

/// Dense univariate polynomial over F_p, little-endian coefficients
/// (constant term first), always trimmed: zero is the empty vector.
class Polynomial {
public:
    explicit Polynomial(const PrimeField& f) : field_(f) {}

    Polynomial(const PrimeField& f, std::initializer_list<i64> coeffs) : field_(f) {
        c_.reserve(coeffs.size());
        for (i64 v : coeffs) c_.push_back(f.reduce(v));
        trim();
    }

    Polynomial(const PrimeField& f, const std::vector<i64>& coeffs) : field_(f) {
        c_.reserve(coeffs.size());
        for (i64 v : coeffs) c_.push_back(f.reduce(v));
        trim();
    }

    static Polynomial from_residues(const PrimeField& f, std::vector<u64> coeffs) {
        Polynomial r(f);
        for (u64& v : coeffs) v %= f.modulus();
        r.c_ = std::move(coeffs);
        r.trim();
        return r;
    }

    static Polynomial monomial(const PrimeField& f, std::size_t deg, i64 coeff = 1) {
        Polynomial r(f);
        if (f.reduce(coeff) != 0) {
            r.c_.assign(deg + 1, 0);
            r.c_[deg] = f.reduce(coeff);
        }
        return r;
    }

    static Polynomial one(const PrimeField& f) { return Polynomial(f, {1}); }

    /// x - a
    static Polynomial x_minus(const FieldElement& a) {
        return Polynomial(a.field(), {-static_cast<i64>(a.value()), 1});
    }

    const PrimeField& field() const { return field_; }

    /// degree; -1 is the distinguished value for the zero polynomial
    int degree() const { return static_cast<int>(c_.size()) - 1; }

    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
    bool is_monic() const { return !c_.empty() && c_.back() == 1; }

    u64 coeff_raw(std::size_t i) const { return i < c_.size() ? c_[i] : 0; }
    FieldElement coeff(std::size_t i) const {
        return FieldElement::from_residue(field_, coeff_raw(i));
    }
    const std::vector<u64>& residues() const { return c_; }

    /// number of nonzero coefficients
    std::size_t weight() const {
        std::size_t w = 0;
        for (u64 v : c_) w += (v != 0);
        return w;
    }

    Polynomial operator+(const Polynomial& o) const {
        check(o);
        std::vector<u64> r(std::max(c_.size(), o.c_.size()), 0);
        for (std::size_t i = 0; i < r.size(); ++i)
            r[i] = field_.add(coeff_raw(i), o.coeff_raw(i));
        return from_trusted(field_, std::move(r));
    }

    Polynomial operator-(const Polynomial& o) const {
        check(o);
        std::vector<u64> r(std::max(c_.size(), o.c_.size()), 0);
        for (std::size_t i = 0; i < r.size(); ++i)
            r[i] = field_.sub(coeff_raw(i), o.coeff_raw(i));
        return from_trusted(field_, std::move(r));
    }

    Polynomial operator-() const {
        std::vector<u64> r(c_.size());
        for (std::size_t i = 0; i < c_.size(); ++i) r[i] = field_.neg(c_[i]);
        return from_trusted(field_, std::move(r));
    }

    Polynomial operator*(const Polynomial& o) const {
        check(o);
        if (is_zero() || o.is_zero()) return Polynomial(field_);
        std::vector<u64> r(c_.size() + o.c_.size() - 1, 0);
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (c_[i] == 0) continue;
            for (std::size_t j = 0; j < o.c_.size(); ++j)
                r[i + j] = field_.add(r[i + j], field_.mul(c_[i], o.c_[j]));
        }
        return from_trusted(field_, std::move(r));
    }

    Polynomial operator*(const FieldElement& s) const {
        if (field_ != s.field()) throw FieldMismatch();
        std::vector<u64> r(c_.size());
        for (std::size_t i = 0; i < c_.size(); ++i) r[i] = field_.mul(c_[i], s.value());
        return from_trusted(field_, std::move(r));
    }

    bool operator==(const Polynomial& o) const {
        check(o);
        return c_ == o.c_;
    }
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    /// Horner evaluation.
    u64 eval_raw(u64 a) const {
        a %= field_.modulus();
        u64 acc = 0;
        for (std::size_t i = c_.size(); i-- > 0;) acc = field_.add(field_.mul(acc, a), c_[i]);
        return acc;
    }
    FieldElement evaluate(const FieldElement& a) const {
        if (field_ != a.field()) throw FieldMismatch();
        return FieldElement::from_residue(field_, eval_raw(a.value()));
    }

    friend std::ostream& operator<<(std::ostream& os, const Polynomial& f) {
        if (f.is_zero()) return os << "0";
        bool first = true;
        for (std::size_t i = f.c_.size(); i-- > 0;) {
            if (f.c_[i] == 0) continue;
            if (!first) os << " + ";
            first = false;
            if (i == 0 || f.c_[i] != 1) os << f.c_[i];
            if (i >= 1) os << "x";
            if (i >= 2) os << "^" << i;
        }
        return os;
    }

private:
    static Polynomial from_trusted(const PrimeField& f, std::vector<u64> coeffs) {
        Polynomial r(f);
        r.c_ = std::move(coeffs);
        r.trim();
        return r;
    }

    void check(const Polynomial& o) const {
        if (field_ != o.field_) throw FieldMismatch();
    }

    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    PrimeField field_;
    std::vector<u64> c_;
};

/// Long division: a = q*b + r with deg r < deg b.
inline std::pair<Polynomial, Polynomial> poly_divmod(const Polynomial& a, const Polynomial& b) {
    if (a.field() != b.field()) throw FieldMismatch();
    if (b.is_zero()) throw DivisionByZeroPoly();
    const PrimeField& F = a.field();
    const int db = b.degree();
    if (a.degree() < db) return {Polynomial(F), a};
    std::vector<u64> rem = a.residues();
    std::vector<u64> quo(a.degree() - db + 1, 0);
    const u64 lead_inv = F.inv(b.coeff_raw(db));
    for (int i = a.degree(); i >= db; --i) {
        const u64 c = F.mul(rem[i], lead_inv);
        if (c == 0) continue;
        quo[i - db] = c;
        for (int j = 0; j <= db; ++j)
            rem[i - db + j] = F.sub(rem[i - db + j], F.mul(c, b.coeff_raw(j)));
    }
    return {Polynomial::from_residues(F, std::move(quo)),
            Polynomial::from_residues(F, std::move(rem))};
}

inline bool divides(const Polynomial& d, const Polynomial& f) {
    return poly_divmod(f, d).second.is_zero();
}

/// x^e mod g by square-and-multiply on residues.
inline Polynomial x_power_mod(u64 e, const Polynomial& g) {
    if (g.is_zero()) throw DivisionByZeroPoly();
    const PrimeField& F = g.field();
    if (g.degree() == 0) return Polynomial(F);
    Polynomial result = poly_divmod(Polynomial::one(F), g).second;
    Polynomial base = poly_divmod(Polynomial::monomial(F, 1), g).second;
    while (e) {
        if (e & 1) result = poly_divmod(result * base, g).second;
        base = poly_divmod(base * base, g).second;
        e >>= 1;
    }
    return result;
}

/// C(n, k) mod p via the base-p digit product (each digit binomial is
/// computed multiplicatively, valid since all divisions are by units).
inline u64 binomial_mod(u64 n, u64 k, const PrimeField& F) {
    if (k > n) return 0;
    const u64 p = F.modulus();
    u64 r = 1;
    while (n || k) {
        u64 nd = n % p, kd = k % p;
        if (kd > nd) return 0;
        kd = std::min(kd, nd - kd);
        u64 c = 1;
        for (u64 i = 1; i <= kd; ++i) c = F.mul(F.mul(c, nd - kd + i), F.inv(i));
        r = F.mul(r, c);
        n /= p;
        k /= p;
    }
    return r;
}

/// k-th Hasse derivative of c evaluated at alpha: sum_j C(j, k) c_j alpha^(j-k).
inline FieldElement hasse_derivative_eval(const Polynomial& c, const FieldElement& alpha,
                                          u64 k) {
    if (c.field() != alpha.field()) throw FieldMismatch();
    const PrimeField& F = c.field();
    const int deg = c.degree();
    u64 acc = 0, apow = 1;
    for (std::size_t j = k; deg >= 0 && j <= static_cast<std::size_t>(deg); ++j) {
        acc = F.add(acc, F.mul(binomial_mod(j, k, F), F.mul(c.coeff_raw(j), apow)));
        apow = F.mul(apow, alpha.value());
    }
    return FieldElement::from_residue(F, acc);
}

/// Irreducibility over F_p by exhaustive root scan plus trial division by all
/// monic polynomials of degree <= deg/2 (any proper factorization implies such
/// a divisor).  Adequate at desk scale.
inline bool is_irreducible(const Polynomial& f) {
    const int deg = f.degree();
    if (deg <= 0) return false;
    if (deg == 1) return true;
    const PrimeField& F = f.field();
    const u64 p = F.modulus();
    for (u64 a = 0; a < p; ++a)
        if (f.eval_raw(a) == 0) return false;
    for (int d = 2; 2 * d <= deg; ++d) {
        // odometer over the d free coefficients of a monic degree-d candidate
        std::vector<u64> cand(d + 1, 0);
        cand[d] = 1;
        for (;;) {
            if (divides(Polynomial::from_residues(F, cand), f)) return false;
            int i = 0;
            while (i < d && ++cand[i] == p) cand[i++] = 0;
            if (i == d) break;
        }
    }
    return true;
}

/// Product of distinct monic irreducible factors with multiplicities.
class FactoredPolynomial {
public:
    using Factor = std::pair<Polynomial, u64>;

    FactoredPolynomial(const PrimeField& f, std::vector<Factor> factors)
        : field_(f), factors_(std::move(factors)) {
        for (std::size_t i = 0; i < factors_.size(); ++i) {
            const auto& [m, e] = factors_[i];
            if (m.field() != field_) throw FieldMismatch();
            if (!m.is_monic()) throw NotMonic();
            if (e == 0) throw std::invalid_argument("factor multiplicity must be >= 1");
            if (!is_irreducible(m))
                throw std::invalid_argument("factor is not irreducible");
            for (std::size_t j = 0; j < i; ++j)
                if (factors_[j].first == m)
                    throw std::invalid_argument("duplicate factor");
        }
    }

    const PrimeField& field() const { return field_; }
    const std::vector<Factor>& factors() const { return factors_; }

    u64 degree() const {
        u64 d = 0;
        for (const auto& [m, e] : factors_) d += e * static_cast<u64>(m.degree());
        return d;
    }

    /// Multiply everything out.
    Polynomial expand() const {
        Polynomial r = Polynomial::one(field_);
        for (const auto& [m, e] : factors_)
            for (u64 i = 0; i < e; ++i) r = r * m;
        return r;
    }

private:
    PrimeField field_;
    std::vector<Factor> factors_;
};

inline Polynomial expand(const FactoredPolynomial& fp) { return fp.expand(); }

/// Factor a monic polynomial: exhaustive root extraction, then trial division
/// by monic polynomials of ascending degree (any divisor found this way is
/// automatically irreducible because smaller-degree factors are already gone).
inline FactoredPolynomial factorize(const Polynomial& f) {
    if (f.is_zero()) throw std::invalid_argument("cannot factor the zero polynomial");
    if (!f.is_monic()) throw NotMonic();
    const PrimeField& F = f.field();
    const u64 p = F.modulus();
    std::vector<FactoredPolynomial::Factor> out;
    Polynomial rest = f;
    for (u64 a = 0; a < p && rest.degree() >= 1; ++a) {
        if (rest.eval_raw(a) != 0) continue;
        const Polynomial lin = Polynomial::x_minus(FieldElement::from_residue(F, a));
        u64 mult = 0;
        for (;;) {
            auto [q, r] = poly_divmod(rest, lin);
            if (!r.is_zero()) break;
            rest = q;
            ++mult;
        }
        out.emplace_back(lin, mult);
    }
    for (int d = 2; 2 * d <= rest.degree(); ++d) {
        std::vector<u64> cand(d + 1, 0);
        cand[d] = 1;
        for (;;) {
            const Polynomial g = Polynomial::from_residues(F, cand);
            u64 mult = 0;
            for (;;) {
                auto [q, r] = poly_divmod(rest, g);
                if (!r.is_zero()) break;
                rest = q;
                ++mult;
            }
            if (mult) out.emplace_back(g, mult);
            if (2 * d > rest.degree()) break;
            int i = 0;
            while (i < d && ++cand[i] == p) cand[i++] = 0;
            if (i == d) break;
        }
    }
    if (rest.degree() >= 1) out.emplace_back(rest, 1);
    return FactoredPolynomial(F, std::move(out));
}

}  // namespace sympair
