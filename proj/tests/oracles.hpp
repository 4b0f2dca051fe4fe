// Brute-force reference implementations used to derive expected values.
// Deliberately independent of the library's computation paths: membership by
// dynamic programming, multiset operations on sorted vectors, generator sums
// by direct subset enumeration.
#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <vector>

namespace oracle {

// reachability table: can[x] iff x is a non-negative combination of gens
inline std::vector<char> reachable_upto(const std::vector<long long>& gens,
                                        long long bound) {
    std::vector<char> can(static_cast<std::size_t>(bound) + 1, 0);
    can[0] = 1;
    for (long long x = 1; x <= bound; ++x)
        for (long long d : gens)
            if (x - d >= 0 && can[static_cast<std::size_t>(x - d)]) {
                can[static_cast<std::size_t>(x)] = 1;
                break;
            }
    return can;
}

struct BruteSemigroup {
    std::vector<long long> gens;
    std::vector<char> can;  // up to bound
    long long bound = 0;
    long long frobenius = -1;
    std::vector<long long> gaps;

    bool member(long long s) const {
        if (s < 0) return false;
        if (s > bound) return true;  // bound is far beyond the conductor
        return can[static_cast<std::size_t>(s)] != 0;
    }
};

inline BruteSemigroup brute_semigroup(std::vector<long long> gens) {
    std::sort(gens.begin(), gens.end());
    BruteSemigroup out;
    out.gens = gens;
    const long long d1 = gens.front(), dm = gens.back();
    long long sigma = 0;
    for (long long d : gens) sigma += d;
    out.bound = (d1 - 1) * (dm - 1) + 2 * sigma + 2;
    out.can = reachable_upto(gens, out.bound);
    for (long long x = 1; x <= (d1 - 1) * (dm - 1); ++x)
        if (!out.can[static_cast<std::size_t>(x)]) out.gaps.push_back(x);
    out.frobenius = out.gaps.empty() ? -1 : out.gaps.back();
    return out;
}

// multisets as sorted vectors with repetition
using Mset = std::vector<long long>;

inline Mset norm(Mset v) {
    std::sort(v.begin(), v.end());
    return v;
}

inline Mset mjoin(const Mset& a, const Mset& b) {
    Mset out = a;
    out.insert(out.end(), b.begin(), b.end());
    return norm(out);
}

inline Mset mmeet(const Mset& a, const Mset& b) {
    Mset out;
    std::map<long long, long long> ca, cb;
    for (long long x : a) ca[x]++;
    for (long long x : b) cb[x]++;
    for (const auto& [v, k] : ca)
        if (cb.count(v))
            for (long long i = 0; i < std::min(k, cb[v]); ++i) out.push_back(v);
    return out;
}

inline Mset msum(const Mset& a, const Mset& b) {
    Mset out;
    for (long long x : a)
        for (long long y : b) out.push_back(x + y);
    return norm(out);
}

// all k-fold sums of distinct entries, one per index subset
inline Mset ksums(const std::vector<long long>& gens, int k) {
    Mset out;
    const int m = static_cast<int>(gens.size());
    for (std::uint32_t mask = 0; mask < (1U << m); ++mask) {
        if (std::popcount(mask) != k) continue;
        long long s = 0;
        for (int j = 0; j < m; ++j)
            if (mask >> j & 1U) s += gens[static_cast<std::size_t>(j)];
        out.push_back(s);
    }
    return norm(out);
}

}  // namespace oracle
