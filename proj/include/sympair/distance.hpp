#pragma once

#include <algorithm>
#include <numeric>
#include <vector>

#include "code.hpp"
#include "linalg.hpp"

namespace sympair {

/// Distinguished "no nonzero codeword" distance; absorbing under dist_mul.
inline constexpr u64 kInfiniteDistance = ~u64{0};

inline u64 dist_mul(u64 a, u64 b) {
    return (a == kInfiniteDistance || b == kInfiniteDistance) ? kInfiniteDistance : a * b;
}

struct NotCyclic : std::invalid_argument {
    NotCyclic() : std::invalid_argument("operation requires eta == 1") {}
};

struct SimpleRoot : std::invalid_argument {
    SimpleRoot() : std::invalid_argument("operation requires p | n (a repeated root)") {}
};

struct ZeroCodeword : std::invalid_argument {
    ZeroCodeword() : std::invalid_argument("the zero codeword has no decomposition") {}
};

struct TooLarge : std::domain_error {
    explicit TooLarge(const std::string& what) : std::domain_error(what) {}
};

/// Hamming weight of (x-1)^t over F_p: the product of (digit + 1) over the
/// base-p digits of t.
inline u64 radix_weight(u64 t, u64 p) {
    u64 w = 1;
    while (t) {
        w *= t % p + 1;
        t /= p;
    }
    return w;
}

/// Visit every nonzero codeword exactly once as (coords, weight), walking the
/// message space with an odometer and updating the running codeword by shifted
/// additions of the generator.
template <class Fn>
void for_each_codeword(const ConstacyclicCode& code, Fn&& fn) {
    const PrimeField& F = code.field();
    const u64 p = F.modulus();
    const std::size_t k = code.k();
    if (k == 0) return;
    const std::vector<u64>& g = code.generator().residues();
    std::vector<u64> cur(code.n(), 0);
    std::size_t weight = 0;
    std::vector<u64> digit(k, 0);
    for (;;) {
        std::size_t j = 0;
        for (;;) {
            for (std::size_t t = 0; t < g.size(); ++t) {
                if (g[t] == 0) continue;
                u64& slot = cur[j + t];
                weight -= (slot != 0);
                slot = F.add(slot, g[t]);
                weight += (slot != 0);
            }
            if (++digit[j] < p) break;
            digit[j] = 0;
            ++j;
            if (j == k) return;
        }
        fn(const_cast<const std::vector<u64>&>(cur), weight);
    }
}

/// x^i mod g for all i < n, one residue row per power (g = the generator,
/// which must have positive degree).
inline std::vector<std::vector<u64>> power_residue_table(const ConstacyclicCode& code) {
    const PrimeField& F = code.field();
    const std::size_t n = code.n();
    const std::size_t R = static_cast<std::size_t>(code.generator().degree());
    const std::vector<u64>& g = code.generator().residues();
    std::vector<std::vector<u64>> xmod(n, std::vector<u64>(R, 0));
    std::vector<u64> cur(R, 0);
    cur[0] = 1;
    for (std::size_t i = 0; i < n; ++i) {
        xmod[i] = cur;
        const u64 top = cur[R - 1];
        for (std::size_t j = R - 1; j > 0; --j) cur[j] = cur[j - 1];
        cur[0] = 0;
        if (top != 0)
            for (std::size_t j = 0; j < R; ++j) cur[j] = F.sub(cur[j], F.mul(top, g[j]));
    }
    return xmod;
}

/// Exact minimum Hamming distance of any constacyclic code: exhausts the p^k
/// codewords when that is at most exhaustive_cap, otherwise enumerates
/// supports in ascending size and solves for a codeword confined to each
/// (columns x^i mod g; the first support with a nontrivial null space gives
/// the distance exactly, since all smaller supports were empty).
inline u64 min_hamming_distance_direct(const ConstacyclicCode& code,
                                       Polynomial* witness = nullptr,
                                       u64 exhaustive_cap = 1'000'000) {
    const PrimeField& F = code.field();
    const std::size_t n = code.n(), k = code.k();
    if (k == 0) {
        if (witness) *witness = Polynomial(F);
        return kInfiniteDistance;
    }
    if (code.generator().is_one()) {
        if (witness) *witness = Polynomial::one(F);
        return 1;
    }

    u128 size = 1;
    bool small = true;
    for (std::size_t i = 0; i < k && small; ++i) {
        size *= F.modulus();
        if (size > exhaustive_cap) small = false;
    }
    if (small) {
        u64 best = kInfiniteDistance;
        std::vector<u64> bw;
        for_each_codeword(code, [&](const std::vector<u64>& v, std::size_t w) {
            if (w < best) {
                best = w;
                bw = v;
            }
        });
        if (witness) *witness = Polynomial::from_residues(F, bw);
        return best;
    }

    const std::size_t R = static_cast<std::size_t>(code.generator().degree());
    const std::vector<std::vector<u64>> xmod = power_residue_table(code);
    NullProbe probe(F);
    std::vector<u64> mat, ns;
    for (std::size_t w = 1; w <= n; ++w) {
        std::vector<std::size_t> idx(w);
        std::iota(idx.begin(), idx.end(), 0);
        for (;;) {
            mat.assign(R * w, 0);
            for (std::size_t col = 0; col < w; ++col)
                for (std::size_t row = 0; row < R; ++row)
                    mat[row * w + col] = xmod[idx[col]][row];
            if (probe.first_null_vector(mat, R, w, ns)) {
                if (witness) {
                    std::vector<u64> coords(n, 0);
                    for (std::size_t col = 0; col < w; ++col) coords[idx[col]] = ns[col];
                    *witness = Polynomial::from_residues(F, std::move(coords));
                }
                return w;
            }
            int i = static_cast<int>(w) - 1;
            while (i >= 0 && idx[i] == n - w + i) --i;
            if (i < 0) break;
            ++idx[i];
            for (std::size_t j = i + 1; j < w; ++j) idx[j] = idx[j - 1] + 1;
        }
    }
    return kInfiniteDistance;  // unreachable for k >= 1
}

/// Brute-force minimum Hamming weight over all p^k - 1 nonzero codewords.
inline u64 dh_bruteforce(const ConstacyclicCode& code, u64 cap = 10'000'000) {
    if (code.k() == 0) return kInfiniteDistance;
    u128 size = 1;
    for (std::size_t i = 0; i < code.k(); ++i) {
        size *= code.field().modulus();
        if (size > cap) throw TooLarge("codeword enumeration exceeds cap");
    }
    u64 best = kInfiniteDistance;
    for_each_codeword(code,
                      [&](const std::vector<u64>&, std::size_t w) { best = std::min<u64>(best, w); });
    return best;
}

/// Level-t quotient of a repeated-root cyclic code: the simple-root cyclic
/// code of length l generated by the product of the irreducible factors of g
/// whose multiplicity exceeds t.
struct BarCode {
    u64 t;
    ConstacyclicCode code;
};

inline BarCode bar_code(const ConstacyclicCode& c, u64 t) {
    if (c.eta() != 1) throw NotCyclic();
    std::vector<FactoredPolynomial::Factor> fs;
    for (const auto& [m, e] : c.factors().factors())
        if (e > t) fs.emplace_back(m, 1);
    return {t, ConstacyclicCode(c.field(), c.l(), 1, FactoredPolynomial(c.field(), fs))};
}

/// Exact minimum distance of a quotient code (kInfiniteDistance for the zero
/// code).  exhaustive_cap as in min_hamming_distance_direct.
inline u64 bar_distance(const BarCode& bar, Polynomial* witness = nullptr,
                        u64 exhaustive_cap = 1'000'000) {
    return min_hamming_distance_direct(bar.code, witness, exhaustive_cap);
}

struct LevelEntry {
    u64 t;
    u64 pt;       // radix_weight(t, p)
    u64 dh_bar;   // distance of the level-t quotient, kInfiniteDistance for {0}
    u64 product;  // dist_mul(pt, dh_bar)
};

struct DistanceCertificate {
    u64 dh = kInfiniteDistance;
    u64 witness_t = 0;  // first minimizing level
    std::vector<LevelEntry> per_level;
};

/// Exact minimum distance of a repeated-root cyclic code (eta = 1, e >= 1):
/// min over t < p^e of radix_weight(t) * dh(quotient_t).  The quotient is a
/// step function of t (it changes only at the distinct factor multiplicities),
/// so its distance is computed once per step.
inline DistanceCertificate dh_repeated_root(const ConstacyclicCode& code) {
    if (code.eta() != 1) throw NotCyclic();
    if (code.e() == 0) throw SimpleRoot();
    const u64 p = code.field().modulus();
    u64 pe = 1;
    for (u64 i = 0; i < code.e(); ++i) pe *= p;

    std::vector<u64> bounds;  // distinct multiplicities, ascending
    for (const auto& [m, e] : code.factors().factors()) bounds.push_back(e);
    std::sort(bounds.begin(), bounds.end());
    bounds.erase(std::unique(bounds.begin(), bounds.end()), bounds.end());

    DistanceCertificate cert;
    cert.per_level.reserve(pe);
    u64 segment_dh = bar_distance(bar_code(code, 0));
    std::size_t next_bound = 0;
    for (u64 t = 0; t < pe; ++t) {
        if (next_bound < bounds.size() && t == bounds[next_bound]) {
            segment_dh = bar_distance(bar_code(code, t));
            ++next_bound;
        }
        const u64 pt = radix_weight(t, p);
        const u64 product = dist_mul(pt, segment_dh);
        cert.per_level.push_back({t, pt, segment_dh, product});
        if (product < cert.dh) {
            cert.dh = product;
            cert.witness_t = t;
        }
    }
    return cert;
}

/// Write a nonzero codeword as c = (x^l - 1)^t * v with (x^l - 1) not
/// dividing v; nv is the weight of v reduced mod (x^l - 1).
struct WeightDecomposition {
    u64 t;
    Polynomial v;
    u64 nv;
};

inline WeightDecomposition weight_decomposition(const ConstacyclicCode& code,
                                                const Codeword& c) {
    if (c.field() != code.field()) throw FieldMismatch();
    if (c.size() != code.n()) throw LengthMismatch();
    if (c.is_zero()) throw ZeroCodeword();
    if (code.eta() != 1) throw NotCyclic();
    const PrimeField& F = code.field();
    const Polynomial xl1 =
        Polynomial::monomial(F, code.l()) - Polynomial::one(F);
    Polynomial v = c.to_polynomial();
    u64 t = 0;
    for (;;) {
        auto [q, r] = poly_divmod(v, xl1);
        if (!r.is_zero()) break;
        v = q;
        ++t;
    }
    const u64 nv = poly_divmod(v, xl1).second.weight();
    return {t, std::move(v), nv};
}

/// Minimum-weight codeword realizing dh_repeated_root: lift a minimum-weight
/// word vbar of the winning quotient as (x^l - 1)^t* * vbar(x^{p^e}) mod
/// (x^n - 1).  Substituting x^{p^e} is the p^e-th power map on F_p[x], so the
/// lift keeps every required factor multiplicity and its weight collapses to
/// radix_weight(t*) * weight(vbar) = dh.
inline Codeword min_weight_codeword(const ConstacyclicCode& code,
                                    const DistanceCertificate& cert) {
    const PrimeField& F = code.field();
    const u64 p = F.modulus();
    if (cert.dh == kInfiniteDistance)
        throw std::invalid_argument("no nonzero codeword exists");
    Polynomial vbar(F);
    bar_distance(bar_code(code, cert.witness_t), &vbar);
    u64 pe = 1;
    for (u64 i = 0; i < code.e(); ++i) pe *= p;
    std::vector<u64> spread((vbar.degree() < 0 ? 0 : vbar.degree() * pe) + 1, 0);
    for (int j = 0; j <= vbar.degree(); ++j) spread[static_cast<u64>(j) * pe] = vbar.coeff_raw(j);
    Polynomial lift = Polynomial::from_residues(F, std::move(spread));
    const Polynomial xl1 = Polynomial::monomial(F, code.l()) - Polynomial::one(F);
    for (u64 i = 0; i < cert.witness_t; ++i) lift = lift * xl1;
    lift = poly_divmod(lift, code.modulus_poly()).second;
    Codeword w = Codeword::from_polynomial(lift, code.n());
    if (!code.contains(w) || w.weight() != cert.dh)
        throw std::logic_error("minimum-weight lift failed verification");
    return w;
}

/// Exact minimum Hamming distance with the appropriate engine.
inline u64 min_hamming_distance(const ConstacyclicCode& code) {
    if (code.k() == 0) return kInfiniteDistance;
    if (code.eta() == 1 && code.e() >= 1) return dh_repeated_root(code).dh;
    return min_hamming_distance_direct(code);
}

}  // namespace sympair
