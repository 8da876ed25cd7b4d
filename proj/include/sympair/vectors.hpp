#pragma once

#include <ostream>
#include <vector>

#include "fields.hpp"
#include "polynomials.hpp"

namespace sympair {

struct LengthMismatch : std::invalid_argument {
    LengthMismatch() : std::invalid_argument("vector lengths differ") {}
};

struct BadLength : std::invalid_argument {
    explicit BadLength(const std::string& what) : std::invalid_argument(what) {}
};

/// Fixed-length coordinate vector over F_p.  Unlike Polynomial, the length is
/// part of the value: trailing zeros are kept.
class FpVector {
public:
    /// Empty vector; placeholder until a real value is assigned.
    FpVector() : field_(2) {}

    FpVector(const PrimeField& f, std::size_t n) : field_(f), v_(n, 0) {}

    FpVector(const PrimeField& f, const std::vector<i64>& coords) : field_(f) {
        v_.reserve(coords.size());
        for (i64 c : coords) v_.push_back(f.reduce(c));
    }

    static FpVector from_residues(const PrimeField& f, std::vector<u64> coords) {
        FpVector r(f, 0);
        for (u64& c : coords) c %= f.modulus();
        r.v_ = std::move(coords);
        return r;
    }

    /// Coefficient vector of a polynomial, padded to length n.
    static FpVector from_polynomial(const Polynomial& f, std::size_t n) {
        if (f.degree() >= static_cast<int>(n))
            throw BadLength("polynomial degree exceeds vector length");
        FpVector r(f.field(), n);
        for (int i = 0; i <= f.degree(); ++i) r.v_[i] = f.coeff_raw(i);
        return r;
    }

    Polynomial to_polynomial() const { return Polynomial::from_residues(field_, v_); }

    const PrimeField& field() const { return field_; }
    std::size_t size() const { return v_.size(); }
    u64 raw(std::size_t i) const { return v_[i]; }
    const std::vector<u64>& residues() const { return v_; }

    void set(std::size_t i, i64 v) { v_[i] = field_.reduce(v); }
    void set_residue(std::size_t i, u64 v) { v_[i] = v % field_.modulus(); }

    std::size_t weight() const {
        std::size_t w = 0;
        for (u64 c : v_) w += (c != 0);
        return w;
    }

    bool is_zero() const { return weight() == 0; }

    FpVector operator+(const FpVector& o) const {
        check(o);
        FpVector r(field_, v_.size());
        for (std::size_t i = 0; i < v_.size(); ++i) r.v_[i] = field_.add(v_[i], o.v_[i]);
        return r;
    }

    FpVector operator-(const FpVector& o) const {
        check(o);
        FpVector r(field_, v_.size());
        for (std::size_t i = 0; i < v_.size(); ++i) r.v_[i] = field_.sub(v_[i], o.v_[i]);
        return r;
    }

    FpVector operator-() const {
        FpVector r(field_, v_.size());
        for (std::size_t i = 0; i < v_.size(); ++i) r.v_[i] = field_.neg(v_[i]);
        return r;
    }

    FpVector operator*(const FieldElement& s) const {
        if (field_ != s.field()) throw FieldMismatch();
        FpVector r(field_, v_.size());
        for (std::size_t i = 0; i < v_.size(); ++i) r.v_[i] = field_.mul(v_[i], s.value());
        return r;
    }

    bool operator==(const FpVector& o) const {
        check(o);
        return v_ == o.v_;
    }
    bool operator!=(const FpVector& o) const { return !(*this == o); }

    friend std::ostream& operator<<(std::ostream& os, const FpVector& x) {
        os << "(";
        for (std::size_t i = 0; i < x.v_.size(); ++i) os << (i ? "," : "") << x.v_[i];
        return os << ")";
    }

private:
    void check(const FpVector& o) const {
        if (field_ != o.field_) throw FieldMismatch();
        if (v_.size() != o.v_.size()) throw LengthMismatch();
    }

    PrimeField field_;
    std::vector<u64> v_;
};

}  // namespace sympair
