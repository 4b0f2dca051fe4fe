#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>
#include <vector>

#include "nsg/errors.hpp"
#include "nsg/integer.hpp"
#include "nsg/multiset.hpp"
#include "nsg/polynomial.hpp"

namespace nsg {

struct GapProfile {
    long long frobenius = -1;               // F, max gap (-1 when gap-free)
    long long conductor = 0;                // c = F + 1
    std::vector<long long> gaps;            // ascending
    long long genus = 0;                    // #gaps
    std::vector<long long> pseudo_frobenius;  // ascending; always contains F
    long long type = 0;                     // #pseudo_frobenius
};

namespace detail {

// Apery table of a (not necessarily minimal) coprime tuple with respect to
// its smallest element: entry r is the least element of the semigroup
// congruent to r mod d1. Round-robin relaxation over the residue classes
// with edge weights d2..dm until a fixed point; at most d1 rounds.
inline std::vector<long long> apery_table_of(const std::vector<long long>& gens) {
    const long long d1 = gens.front();
    const long long unset = std::numeric_limits<long long>::max();
    std::vector<long long> ap(static_cast<std::size_t>(d1), unset);
    ap[0] = 0;
    bool changed = true;
    while (changed) {
        changed = false;
        for (long long r = 0; r < d1; ++r) {
            if (ap[static_cast<std::size_t>(r)] == unset) continue;
            for (std::size_t j = 1; j < gens.size(); ++j) {
                const long long d = gens[j];
                const long long r2 = (r + d) % d1;
                const long long cand = ap[static_cast<std::size_t>(r)] + d;
                if (cand < ap[static_cast<std::size_t>(r2)]) {
                    ap[static_cast<std::size_t>(r2)] = cand;
                    changed = true;
                }
            }
        }
    }
    return ap;
}

inline bool member_of(const std::vector<long long>& ap, long long d1, long long s) {
    if (s < 0) return false;
    return s >= ap[static_cast<std::size_t>(s % d1)];
}

// Is x representable as a non-negative combination of gens (gcd may exceed 1)?
inline bool representable(long long x, std::vector<long long> gens) {
    const long long g = gcd_of(gens);
    if (x % g != 0) return false;
    for (auto& d : gens) d /= g;
    std::sort(gens.begin(), gens.end());
    const auto ap = apery_table_of(gens);
    return member_of(ap, gens.front(), x / g);
}

}  // namespace detail

// Validated numerical semigroup: strictly increasing minimal generator tuple
// with gcd 1, plus the cached Apery table with respect to d1. Immutable after
// construction; every query is pure.
class NumericalSemigroup {
public:
    explicit NumericalSemigroup(std::vector<long long> generators)
        : gens_(std::move(generators)) {
        validate_and_build();
    }

    const std::vector<long long>& generators() const { return gens_; }
    int edim() const { return static_cast<int>(gens_.size()); }
    long long multiplicity() const { return gens_.front(); }

    long long sigma() const {  // Sigma_m
        long long s = 0;
        for (long long d : gens_) s += d;
        return s;
    }

    long long frobenius() const { return frobenius_; }
    long long conductor() const { return frobenius_ + 1; }

    bool contains(long long s) const {
        return detail::member_of(apery_, multiplicity(), s);
    }

    const std::vector<long long>& apery_table() const { return apery_; }

    IntMultiset apery_set() const {
        IntMultiset out;
        for (long long a : apery_) out.add(a);
        return out;
    }

    // AP1(z), the generating polynomial of the Apery set
    IntPolynomial apery_polynomial() const {
        IntPolynomial p;
        for (long long a : apery_) p = p + IntPolynomial::monomial(a, 1);
        return p;
    }

    GapProfile gap_profile() const {
        GapProfile out;
        out.frobenius = frobenius_;
        out.conductor = frobenius_ + 1;
        if (frobenius_ > kMaxGapSpan)
            throw InputTooLarge("Frobenius number too large for gap enumeration");
        for (long long s = 1; s <= frobenius_; ++s)
            if (!contains(s)) out.gaps.push_back(s);
        out.genus = static_cast<long long>(out.gaps.size());
        // Pseudo-Frobenius: x not in S with x + s in S for every non-zero
        // s in S; testing the generators as increments suffices. Candidates
        // are the gaps, plus F itself (F = -1 is not a gap but qualifies for
        // the trivial semigroup).
        std::vector<long long> cands = out.gaps;
        if (!std::binary_search(cands.begin(), cands.end(), frobenius_))
            cands.push_back(frobenius_);
        for (long long x : cands) {
            bool ok = true;
            for (long long d : gens_)
                if (!contains(x + d)) {
                    ok = false;
                    break;
                }
            if (ok) out.pseudo_frobenius.push_back(x);
        }
        std::sort(out.pseudo_frobenius.begin(), out.pseudo_frobenius.end());
        out.type = static_cast<long long>(out.pseudo_frobenius.size());
        return out;
    }

    // sum of z^s over s in S, s <= n
    IntPolynomial hilbert_truncated(long long n) const {
        if (n < 0) throw PreconditionFailed("hilbert truncation degree below zero");
        if (n > kMaxGapSpan) throw InputTooLarge("hilbert truncation degree");
        IntPolynomial p;
        for (long long s = 0; s <= n; ++s)
            if (contains(s)) p = p + IntPolynomial::monomial(s, 1);
        return p;
    }

    // Numerator Q of the Hilbert series, computed two independent ways:
    // AP1 * prod_{j>=2}(1 - z^{d_j}) and the truncated Hilbert series times
    // the full product. Disagreement signals an implementation bug.
    IntPolynomial numerator_q() const {
        const long long fs = frobenius_ + sigma();
        IntPolynomial via_apery =
            apery_polynomial() *
            product_one_minus_z_pow(std::vector<long long>(gens_.begin() + 1, gens_.end()));
        IntPolynomial via_hilbert =
            (hilbert_truncated(fs) * product_one_minus_z_pow(gens_)).truncated(fs);
        if (via_apery != via_hilbert)
            throw InternalInconsistency("numerator routes disagree");
        if (via_apery.coeff(0) != 1)
            throw InternalInconsistency("numerator constant term");
        const Integer lead = edim() % 2 == 0 ? Integer(-1) : Integer(1);
        if (via_apery.coeff(fs) != lead)
            throw InternalInconsistency("numerator leading term");
        return via_apery;
    }

    bool operator==(const NumericalSemigroup& o) const { return gens_ == o.gens_; }

private:
    static constexpr long long kMaxGenerator = 1'000'000'000;
    static constexpr long long kMaxMultiplicity = 1'000'000;
    static constexpr long long kMaxGapSpan = 10'000'000;

    void validate_and_build() {
        if (gens_.empty()) throw NonPositiveGenerator("empty generator tuple");
        for (long long d : gens_) {
            if (d <= 0) throw NonPositiveGenerator(std::to_string(d));
            if (d > kMaxGenerator) throw InputTooLarge("generator " + std::to_string(d));
        }
        std::sort(gens_.begin(), gens_.end());
        for (std::size_t i = 1; i < gens_.size(); ++i)
            if (gens_[i] == gens_[i - 1])
                throw DuplicateGenerator(std::to_string(gens_[i]));
        if (gcd_of(gens_) != 1) throw NotCoprime("generator gcd exceeds 1");
        if (gens_.front() > kMaxMultiplicity)
            throw InputTooLarge("multiplicity " + std::to_string(gens_.front()));
        if (gens_.size() > 1) {
            for (std::size_t i = 0; i < gens_.size(); ++i) {
                std::vector<long long> others;
                others.reserve(gens_.size() - 1);
                for (std::size_t j = 0; j < gens_.size(); ++j)
                    if (j != i) others.push_back(gens_[j]);
                if (detail::representable(gens_[i], others))
                    throw NotMinimal(std::to_string(gens_[i]) +
                                     " is generated by the other elements");
            }
        }
        apery_ = detail::apery_table_of(gens_);
        frobenius_ = *std::max_element(apery_.begin(), apery_.end()) - gens_.front();
        // minimal generating sets satisfy d1 >= m
        if (gens_.front() < static_cast<long long>(gens_.size()))
            throw InternalInconsistency("multiplicity below embedding dimension");
    }

    std::vector<long long> gens_;
    std::vector<long long> apery_;
    long long frobenius_ = -1;
};

}  // namespace nsg
