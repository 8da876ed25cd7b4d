#pragma once

#include <atomic>
#include <cstddef>
#include <functional>
#include <thread>
#include <utility>
#include <vector>

#include "distance.hpp"
#include "metric.hpp"

namespace sympair {

struct Infeasible : std::invalid_argument {
    Infeasible() : std::invalid_argument("no support has this weight/run class") {}
};

struct DegenerateCode : std::invalid_argument {
    explicit DegenerateCode(const std::string& what) : std::invalid_argument(what) {}
};

struct DimensionMismatch : std::invalid_argument {
    explicit DimensionMismatch(const std::string& what) : std::invalid_argument(what) {}
};

/// A candidate support: w positions forming exactly r cyclic runs, canonical
/// (runs listed by ascending start; a run may wrap past n - 1).  positions
/// lists the support in run order.
struct SupportPattern {
    std::size_t w = 0, r = 0;
    std::vector<Run> runs;
    std::vector<std::size_t> positions;
};

inline u64 binom_u64(u64 a, u64 b) {
    if (b > a) return 0;
    b = std::min(b, a - b);
    u128 r = 1;
    for (u64 i = 1; i <= b; ++i) r = r * (a - b + i) / i;
    return static_cast<u64>(r);
}

/// Number of supports in the (w, r) class at length n:
/// n * C(w-1, r-1) * C(n-w-1, r-1) / r.  Zero for empty classes.
inline u64 pattern_count(std::size_t n, std::size_t w, std::size_t r) {
    if (r < 1 || r > w || w + r > n) return 0;
    const u128 num = u128(n) * binom_u64(w - 1, r - 1) * binom_u64(n - w - 1, r - 1);
    if (num % r != 0) throw std::logic_error("pattern count is not integral");
    return static_cast<u64>(num / r);
}

namespace detail {

/// Enumerates the (w, r) class in canonical order: ascending first-run start
/// s1, then run lengths, then inter-run gaps, both in lexicographic order.
/// Prunes so every leaf is canonical (the last run starts at index <= n - 1;
/// the wrap gap is forced by the cycle closing exactly).
template <class Fn>
class PatternEnum {
public:
    PatternEnum(std::size_t n, std::size_t w, std::size_t r, Fn& fn)
        : n_(n), w_(w), r_(r), fn_(fn), len_(r), gap_(r) {
        pat_.w = w;
        pat_.r = r;
        pat_.runs.resize(r);
        pat_.positions.resize(w);
    }

    bool run(std::size_t s1_begin, std::size_t s1_end) {
        for (std::size_t s1 = s1_begin; s1 < s1_end && !stopped_; ++s1) {
            s1_ = s1;
            pick_len(0, w_);
        }
        return stopped_;
    }

private:
    void pick_len(std::size_t i, std::size_t rem) {
        if (stopped_) return;
        if (i == r_ - 1) {
            len_[i] = rem;
            // Pre-wrap gaps must keep the last run's start at most n - 1.
            const std::size_t head = s1_ + (w_ - rem);
            if (head + (r_ - 1) > n_ - 1) return;  // even all-1 gaps overflow
            pick_gap(0, n_ - w_, n_ - 1 - head);
            return;
        }
        for (std::size_t li = 1; li + (r_ - 1 - i) <= rem && !stopped_; ++li) {
            len_[i] = li;
            pick_len(i + 1, rem - li);
        }
    }

    // rem: total gap left to place (gaps j..r-1, wrap gap included, each >= 1)
    // slack: largest sum the remaining pre-wrap gaps may still take
    void pick_gap(std::size_t j, std::size_t rem, std::size_t slack) {
        if (stopped_) return;
        if (j == r_ - 1) {
            gap_[j] = rem;
            emit();
            return;
        }
        const std::size_t later = r_ - 1 - j;  // gaps after this one, wrap included
        for (std::size_t gj = 1;
             gj + later <= rem && gj + (later - 1) <= slack && !stopped_; ++gj) {
            gap_[j] = gj;
            pick_gap(j + 1, rem - gj, slack - gj);
        }
    }

    void emit() {
        std::size_t start = s1_, pos = 0;
        for (std::size_t i = 0; i < r_; ++i) {
            pat_.runs[i] = Run{start, len_[i]};
            for (std::size_t j = 0; j < len_[i]; ++j)
                pat_.positions[pos++] = (start + j) % n_;
            start += len_[i] + gap_[i];
        }
        if (fn_(const_cast<const SupportPattern&>(pat_))) stopped_ = true;
    }

    std::size_t n_, w_, r_;
    Fn& fn_;
    std::vector<std::size_t> len_, gap_;
    SupportPattern pat_;
    std::size_t s1_ = 0;
    bool stopped_ = false;
};

}  // namespace detail

/// Visit the canonical patterns of the (w, r) class whose first run starts in
/// [s1_begin, s1_end).  fn returns true to stop; the return value says
/// whether it did.
template <class Fn>
bool for_each_pattern(std::size_t n, std::size_t w, std::size_t r,
                      std::size_t s1_begin, std::size_t s1_end, Fn&& fn) {
    if (r < 1 || r > w || w + r > n) throw Infeasible();
    detail::PatternEnum<Fn> e(n, w, r, fn);
    return e.run(s1_begin, std::min(s1_end, n));
}

template <class Fn>
bool for_each_pattern(std::size_t n, std::size_t w, std::size_t r, Fn&& fn) {
    return for_each_pattern(n, w, r, 0, n, std::forward<Fn>(fn));
}

inline std::vector<SupportPattern> enumerate_patterns(std::size_t n, std::size_t w,
                                                      std::size_t r) {
    std::vector<SupportPattern> out;
    for_each_pattern(n, w, r, [&](const SupportPattern& p) {
        out.push_back(p);
        return false;
    });
    return out;
}

/// Basis of the codewords supported inside the given positions: null space of
/// the matrix whose columns are x^i mod g.
inline std::vector<Codeword> null_space_on_support(const ConstacyclicCode& code,
                                                   const std::vector<std::size_t>& positions) {
    const PrimeField& F = code.field();
    for (std::size_t i : positions)
        if (i >= code.n()) throw OutOfRange("support position outside the code length");
    if (code.generator().is_one()) {  // every vector is a codeword
        std::vector<Codeword> basis;
        for (std::size_t j = 0; j < positions.size(); ++j) {
            Codeword v(F, code.n());
            v.set_residue(positions[j], 1);
            basis.push_back(std::move(v));
        }
        return basis;
    }
    const auto xmod = power_residue_table(code);
    const std::size_t R = static_cast<std::size_t>(code.generator().degree());
    const std::size_t w = positions.size();
    std::vector<u64> mat(R * w, 0);
    for (std::size_t col = 0; col < w; ++col)
        for (std::size_t row = 0; row < R; ++row)
            mat[row * w + col] = xmod[positions[col]][row];
    std::vector<Codeword> basis;
    for (const auto& nv : null_space(F, mat, R, w)) {
        Codeword v(F, code.n());
        for (std::size_t j = 0; j < w; ++j)
            if (nv[j]) v.set_residue(positions[j], nv[j]);
        basis.push_back(std::move(v));
    }
    return basis;
}

/// One (w, r) class of the scan: how many patterns it holds / were probed,
/// and whether a codeword lives in it.
struct ClassStat {
    std::size_t w = 0, r = 0;
    u64 patterns = 0;
    bool solvable = false;
};

struct PairDistanceCertificate {
    u64 dp = 0;
    u64 dh = 0;
    bool mds = false;
    Codeword witness;
    std::vector<ClassStat> classes;  // in scan order
};

namespace detail {

struct ClassHit {
    std::vector<Run> runs;
    std::vector<std::size_t> positions;
    std::vector<u64> coeffs;
};

struct ClassScan {
    bool solvable = false;
    u64 patterns = 0;
    ClassHit hit;
};

/// Scan one (w, r) class in canonical order for a support carrying a
/// codeword.  The reported hit and pattern count are deterministic and
/// independent of the thread count: the winner is the canonically first
/// solvable pattern, and `patterns` counts up to and including it (the whole
/// class when unsolvable).
inline ClassScan scan_class(const ConstacyclicCode& code,
                            const std::vector<std::vector<u64>>& xmod,
                            std::size_t w, std::size_t r, unsigned threads) {
    const PrimeField& F = code.field();
    const std::size_t n = code.n();
    const std::size_t R = static_cast<std::size_t>(code.generator().degree());
    ClassScan out;

    if (threads <= 1) {
        NullProbe probe(F);
        std::vector<u64> mat, ns;
        u64 count = 0;
        for_each_pattern(n, w, r, [&](const SupportPattern& pat) {
            ++count;
            mat.assign(R * w, 0);
            for (std::size_t col = 0; col < w; ++col)
                for (std::size_t row = 0; row < R; ++row)
                    mat[row * w + col] = xmod[pat.positions[col]][row];
            if (!probe.first_null_vector(mat, R, w, ns)) return false;
            out.solvable = true;
            out.hit = {pat.runs, pat.positions, ns};
            return true;
        });
        out.patterns = out.solvable ? count : pattern_count(n, w, r);
        return out;
    }

    std::atomic<std::size_t> next{0};
    std::atomic<std::size_t> best{n};
    std::vector<ClassHit> hits(threads);
    std::vector<std::size_t> hit_s1(threads, n);
    auto worker = [&](unsigned id) {
        NullProbe probe(F);
        std::vector<u64> mat, ns;
        for (;;) {
            const std::size_t s1 = next.fetch_add(1);
            if (s1 >= n || s1 > best.load()) return;
            const bool found =
                for_each_pattern(n, w, r, s1, s1 + 1, [&](const SupportPattern& pat) {
                    if (best.load(std::memory_order_relaxed) < s1) return true;
                    mat.assign(R * w, 0);
                    for (std::size_t col = 0; col < w; ++col)
                        for (std::size_t row = 0; row < R; ++row)
                            mat[row * w + col] = xmod[pat.positions[col]][row];
                    if (!probe.first_null_vector(mat, R, w, ns)) return false;
                    hits[id] = {pat.runs, pat.positions, ns};
                    hit_s1[id] = s1;
                    std::size_t cur = best.load();
                    while (s1 < cur && !best.compare_exchange_weak(cur, s1)) {}
                    return true;
                });
            if (found && hit_s1[id] == s1) return;  // a real hit, not an abort
        }
    };
    std::vector<std::thread> pool;
    for (unsigned id = 1; id < threads; ++id) pool.emplace_back(worker, id);
    worker(0);
    for (auto& t : pool) t.join();

    const std::size_t win = best.load();
    if (win == n) {
        out.patterns = pattern_count(n, w, r);
        return out;
    }
    out.solvable = true;
    for (unsigned id = 0; id < threads; ++id)
        if (hit_s1[id] == win) out.hit = hits[id];
    // Deterministic probe count: rank of the winner in canonical order.
    u64 rank = 0;
    for_each_pattern(n, w, r, 0, win + 1, [&](const SupportPattern& pat) {
        ++rank;
        return pat.runs == out.hit.runs;
    });
    out.patterns = rank;
    return out;
}

}  // namespace detail

/// Exact minimum pair distance with a certificate.  Levels L = dh+1, ...,
/// min(2 dh, n) - 1 are scanned in order; level L splits into the classes
/// (w, r = L - w) with w descending from neither bound: any codeword of pair
/// weight L < n has Hamming weight w in [max(dh, ceil(L/2)), L-1] and exactly
/// r runs, and conversely a codeword found on a level-L pattern has pair
/// weight at most L.  The first solvable class therefore pins dp = L exactly;
/// if no level is solvable, dp = min(2 dh, n) with a minimum-Hamming-weight
/// witness.
inline PairDistanceCertificate exact_pair_distance(
    const ConstacyclicCode& code, unsigned threads = 1,
    const std::function<void(const ClassStat&)>& progress = {}) {
    const std::size_t n = code.n(), k = code.k();
    if (n < 2) throw DegenerateCode("pair metrics need length >= 2");
    if (k == 0) throw DegenerateCode("the zero code has no pair distance");
    if (threads == 0) threads = 1;

    // Exact Hamming distance plus a minimum-weight witness for the fallback.
    u64 dh;
    Codeword dh_witness(code.field(), n);
    if (code.eta() == 1 && code.e() >= 1) {
        const auto cert = dh_repeated_root(code);
        dh = cert.dh;
        dh_witness = min_weight_codeword(code, cert);
    } else {
        Polynomial w(code.field());
        dh = min_hamming_distance_direct(code, &w);
        dh_witness = Codeword::from_polynomial(w, n);
    }

    PairDistanceCertificate cert;
    cert.dh = dh;
    cert.witness = dh_witness;

    if (dh == n) {  // every nonzero codeword has full support
        cert.dp = n;
        cert.mds = is_mds_pair(n, k, cert.dp);
        return cert;
    }

    const u64 cap = std::min<u64>(2 * dh, n);
    const auto xmod =
        code.generator().is_one() ? std::vector<std::vector<u64>>{} : power_residue_table(code);
    for (u64 level = dh + 1; level < cap; ++level) {
        const std::size_t L = static_cast<std::size_t>(level);
        for (std::size_t w = std::max<std::size_t>(dh, (L + 1) / 2); w + 1 <= L; ++w) {
            const std::size_t r = L - w;
            const auto scan = detail::scan_class(code, xmod, w, r, threads);
            cert.classes.push_back({w, r, scan.patterns, scan.solvable});
            if (progress) progress(cert.classes.back());
            if (!scan.solvable) continue;
            Codeword v(code.field(), n);
            for (std::size_t j = 0; j < scan.hit.positions.size(); ++j)
                v.set_residue(scan.hit.positions[j], scan.hit.coeffs[j]);
            if (!code.contains(v) || pair_weight(v) != level)
                throw std::logic_error("pair-distance witness failed verification");
            cert.dp = level;
            cert.mds = is_mds_pair(n, k, cert.dp);
            cert.witness = std::move(v);
            return cert;
        }
    }

    cert.dp = cap;
    if (pair_weight(cert.witness) != cert.dp)
        throw std::logic_error("pair-distance fallback witness failed verification");
    cert.mds = is_mds_pair(n, k, cert.dp);
    return cert;
}

struct MdsVerification {
    bool verified = false;
    PairDistanceCertificate cert;
};

/// Certify dp == target_dp for a code whose dimension already sits on the
/// Singleton-type line k = n - target_dp + 2; any other dimension cannot be
/// MDS at that target and fails fast.
inline MdsVerification verify_mds_pair(
    const ConstacyclicCode& code, u64 target_dp, unsigned threads = 1,
    const std::function<void(const ClassStat&)>& progress = {}) {
    if (target_dp < 2 || target_dp > code.n())
        throw OutOfRange("target pair distance must lie in [2, n]");
    if (code.k() != code.n() - static_cast<std::size_t>(target_dp) + 2)
        throw DimensionMismatch("dimension is off the Singleton-type line for this target");
    MdsVerification out;
    out.cert = exact_pair_distance(code, threads, progress);
    out.verified = out.cert.dp == target_dp && out.cert.mds;
    return out;
}

/// Brute-force minimum pair weight over all p^k - 1 nonzero codewords.
inline u64 dp_bruteforce(const ConstacyclicCode& code, u64 cap = 10'000'000) {
    if (code.n() < 2) throw TooShort();
    if (code.k() == 0) return kInfiniteDistance;
    u128 size = 1;
    for (std::size_t i = 0; i < code.k(); ++i) {
        size *= code.field().modulus();
        if (size > cap) throw TooLarge("codeword enumeration exceeds cap");
    }
    const std::size_t n = code.n();
    u64 best = kInfiniteDistance;
    for_each_codeword(code, [&](const std::vector<u64>& v, std::size_t) {
        u64 wp = 0;
        for (std::size_t i = 0; i < n; ++i) wp += (v[i] != 0 || v[(i + 1) % n] != 0);
        best = std::min(best, wp);
    });
    return best;
}

}  // namespace sympair
