#pragma once

#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace sympair {

using u32 = std::uint32_t;
using u64 = std::uint64_t;
using i64 = std::int64_t;
using u128 = unsigned __int128;

struct NotPrime : std::invalid_argument {
    explicit NotPrime(u64 v)
        : std::invalid_argument("not a prime: " + std::to_string(v)) {}
};

struct ZeroInverse : std::domain_error {
    ZeroInverse() : std::domain_error("zero has no multiplicative inverse") {}
};

struct FieldMismatch : std::invalid_argument {
    FieldMismatch() : std::invalid_argument("operands live in different prime fields") {}
};

struct NoSuchRoot : std::domain_error {
    NoSuchRoot(u64 m, u64 p)
        : std::domain_error("no element of order " + std::to_string(m) + " in F_" +
                            std::to_string(p) + "*") {}
};

class FieldElement;

/// Prime field F_p for word-sized p (p < 2^63).  Elements are canonical
/// residues in [0, p); primality is checked by trial division at construction.
class PrimeField {
public:
    explicit PrimeField(u64 p) : p_(p) {
        if (p < 2 || p >= (u64{1} << 63)) throw NotPrime(p);
        for (u64 d = 2; d * d <= p; ++d)
            if (p % d == 0) throw NotPrime(p);
    }

    u64 modulus() const { return p_; }

    friend bool operator==(const PrimeField& a, const PrimeField& b) { return a.p_ == b.p_; }
    friend bool operator!=(const PrimeField& a, const PrimeField& b) { return a.p_ != b.p_; }

    /// Canonical residue of an arbitrary signed integer.
    u64 reduce(i64 v) const {
        i64 r = v % static_cast<i64>(p_);
        return static_cast<u64>(r < 0 ? r + static_cast<i64>(p_) : r);
    }

    // Raw residue arithmetic; arguments must already be canonical.
    u64 add(u64 a, u64 b) const { u64 s = a + b; return s >= p_ ? s - p_ : s; }
    u64 sub(u64 a, u64 b) const { return a >= b ? a - b : a + (p_ - b); }
    u64 neg(u64 a) const { return a == 0 ? 0 : p_ - a; }
    u64 mul(u64 a, u64 b) const { return static_cast<u64>(static_cast<u128>(a) * b % p_); }

    u64 pow(u64 a, u64 e) const {
        u64 r = 1 % p_;
        a %= p_;
        while (e) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }

    /// Multiplicative inverse (Fermat powering); throws ZeroInverse on 0.
    u64 inv(u64 a) const {
        if (a % p_ == 0) throw ZeroInverse();
        return pow(a, p_ - 2);
    }

    FieldElement element(i64 v) const;

private:
    u64 p_;
};

/// A single residue bound to its field; cross-field arithmetic is rejected.
class FieldElement {
public:
    FieldElement(const PrimeField& f, i64 v) : field_(f), v_(f.reduce(v)) {}

    static FieldElement from_residue(const PrimeField& f, u64 r) {
        FieldElement e(f, 0);
        e.v_ = r % f.modulus();
        return e;
    }

    u64 value() const { return v_; }
    const PrimeField& field() const { return field_; }
    bool is_zero() const { return v_ == 0; }

    FieldElement operator+(const FieldElement& o) const {
        check(o);
        return from_residue(field_, field_.add(v_, o.v_));
    }
    FieldElement operator-(const FieldElement& o) const {
        check(o);
        return from_residue(field_, field_.sub(v_, o.v_));
    }
    FieldElement operator*(const FieldElement& o) const {
        check(o);
        return from_residue(field_, field_.mul(v_, o.v_));
    }
    FieldElement operator/(const FieldElement& o) const {
        check(o);
        return from_residue(field_, field_.mul(v_, field_.inv(o.v_)));
    }
    FieldElement operator-() const { return from_residue(field_, field_.neg(v_)); }

    FieldElement pow(u64 e) const { return from_residue(field_, field_.pow(v_, e)); }
    FieldElement inverse() const { return from_residue(field_, field_.inv(v_)); }

    bool operator==(const FieldElement& o) const {
        check(o);
        return v_ == o.v_;
    }
    bool operator!=(const FieldElement& o) const { return !(*this == o); }

    friend std::ostream& operator<<(std::ostream& os, const FieldElement& e) {
        return os << e.v_ << " (mod " << e.field_.modulus() << ")";
    }

private:
    void check(const FieldElement& o) const {
        if (field_ != o.field_) throw FieldMismatch();
    }

    PrimeField field_;
    u64 v_;
};

inline FieldElement PrimeField::element(i64 v) const { return FieldElement(*this, v); }

/// Inverse as a free function, for callers holding raw residues.
inline FieldElement field_inverse(const FieldElement& a) { return a.inverse(); }

/// Smallest residue of multiplicative order exactly m; requires m | p-1.
inline FieldElement root_of_unity(const PrimeField& F, u64 m) {
    const u64 p = F.modulus();
    if (m == 0 || (p - 1) % m != 0) throw NoSuchRoot(m, p);
    std::vector<u64> primes;
    u64 t = m;
    for (u64 d = 2; d * d <= t; ++d)
        if (t % d == 0) {
            primes.push_back(d);
            while (t % d == 0) t /= d;
        }
    if (t > 1) primes.push_back(t);
    for (u64 a = 1; a < p; ++a) {
        if (F.pow(a, m) != 1) continue;
        bool exact = true;
        for (u64 q : primes)
            if (F.pow(a, m / q) == 1) {
                exact = false;
                break;
            }
        if (exact) return FieldElement::from_residue(F, a);
    }
    throw NoSuchRoot(m, p);  // unreachable: F_p* is cyclic of order p-1
}

}  // namespace sympair
