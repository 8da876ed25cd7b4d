#pragma once

#include <utility>
#include <vector>

#include "vectors.hpp"

namespace sympair {

struct TooShort : std::invalid_argument {
    TooShort() : std::invalid_argument("pair metrics need length >= 2") {}
};

struct OutOfRange : std::invalid_argument {
    explicit OutOfRange(const std::string& what) : std::invalid_argument(what) {}
};

/// Pair read of x: the vector of adjacent coordinate pairs (x_i, x_{i+1}),
/// indices cyclic.
inline std::vector<std::pair<u64, u64>> pair_read(const FpVector& x) {
    const std::size_t n = x.size();
    if (n < 2) throw TooShort();
    std::vector<std::pair<u64, u64>> r;
    r.reserve(n);
    for (std::size_t i = 0; i < n; ++i) r.emplace_back(x.raw(i), x.raw((i + 1) % n));
    return r;
}

/// Number of nonzero symbol pairs in the pair read.
inline u64 pair_weight(const FpVector& x) {
    const std::size_t n = x.size();
    if (n < 2) throw TooShort();
    u64 w = 0;
    for (std::size_t i = 0; i < n; ++i) w += (x.raw(i) != 0 || x.raw((i + 1) % n) != 0);
    return w;
}

inline u64 pair_distance(const FpVector& x, const FpVector& y) { return pair_weight(x - y); }

struct Run {
    std::size_t start, length;
    bool operator==(const Run& o) const { return start == o.start && length == o.length; }
};

/// Maximal cyclic runs of nonzero coordinates, sorted by start index.  A run
/// crossing the wrap point keeps its cyclic start (the latest index), so the
/// profile is unique.  A full-support vector is one run of length n.
struct RunProfile {
    std::vector<Run> runs;
    bool full_support = false;
};

inline RunProfile run_profile(const FpVector& x) {
    const std::size_t n = x.size();
    if (n < 2) throw TooShort();
    const std::size_t w = x.weight();
    if (w == 0) return {};
    if (w == n) return {{Run{0, n}}, true};
    std::size_t z = 0;
    while (x.raw(z) != 0) ++z;
    std::vector<Run> runs;
    std::size_t start = 0, len = 0;
    for (std::size_t off = 1; off <= n; ++off) {
        const std::size_t pos = (z + off) % n;
        if (x.raw(pos) != 0) {
            if (len == 0) start = pos;
            ++len;
        } else if (len != 0) {
            runs.push_back({start, len});
            len = 0;
        }
    }
    std::sort(runs.begin(), runs.end(),
              [](const Run& a, const Run& b) { return a.start < b.start; });
    return {std::move(runs), false};
}

/// Largest-possible-size test at pair distance dp: dimension k meets the
/// Singleton-type bound iff k == n - dp + 2.
inline bool is_mds_pair(std::size_t n, std::size_t k, u64 dp) {
    if (dp < 2 || dp > n) throw OutOfRange("pair distance must lie in [2, n]");
    return k == n - static_cast<std::size_t>(dp) + 2;
}

/// Sandwich bounds on the pair distance from the Hamming distance:
/// dh + 1 <= dp <= 2 * dh, valid for 0 < dh < n.
inline std::pair<u64, u64> pair_distance_bounds(u64 dh, std::size_t n) {
    if (dh == 0 || dh >= n) throw OutOfRange("bounds require 0 < dh < n");
    return {dh + 1, 2 * dh};
}

}  // namespace sympair
