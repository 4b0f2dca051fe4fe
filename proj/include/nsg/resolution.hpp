#pragma once

#include <cstdint>
#include <vector>

#include "nsg/errors.hpp"
#include "nsg/multiset.hpp"
#include "nsg/polynomial.hpp"
#include "nsg/semigroup.hpp"
#include "nsg/simplicial.hpp"

namespace nsg {

// Graded Betti data: tables[i] is the multiset B_i of syzygy degrees at
// homological index i (B_0 = {0}), so betti()[i] = #B_i.
struct GradedBettiTable {
    std::vector<IntMultiset> tables;  // size edim
    long long frobenius = 0;
    long long sigma = 0;

    std::vector<Integer> betti() const {
        std::vector<Integer> out;
        out.reserve(tables.size());
        for (const auto& t : tables) out.push_back(t.cardinality());
        return out;
    }
};

namespace detail {

constexpr int kMaxComplexVertices = 16;

inline std::vector<long long> subset_sums(const std::vector<long long>& gens) {
    const int m = static_cast<int>(gens.size());
    std::vector<long long> sums(std::size_t{1} << m, 0);
    for (std::uint32_t mask = 1; mask < sums.size(); ++mask) {
        const int low = std::countr_zero(mask);
        sums[mask] = sums[mask & (mask - 1)] + gens[static_cast<std::size_t>(low)];
    }
    return sums;
}

inline SimplicialComplex divisor_complex_from_sums(
    const NumericalSemigroup& s, const std::vector<long long>& sums, long long deg) {
    std::vector<std::uint32_t> faces;
    for (std::uint32_t mask = 0; mask < sums.size(); ++mask) {
        const long long rest = deg - sums[mask];
        if (rest >= 0 && s.contains(rest)) faces.push_back(mask);
    }
    return SimplicialComplex(s.edim(), std::move(faces));
}

}  // namespace detail

// Squarefree divisor complex of a degree s in S: faces are the generator
// subsets J with s - sum(J) in S (closed under subsets by construction).
inline SimplicialComplex divisor_complex(const NumericalSemigroup& s, long long deg) {
    if (!s.contains(deg)) throw NotMember(std::to_string(deg));
    if (s.edim() > detail::kMaxComplexVertices)
        throw InputTooLarge("embedding dimension beyond complex support");
    return detail::divisor_complex_from_sums(s, detail::subset_sums(s.generators()), deg);
}

// Betti numbers graded by degree: beta_{i,s} is the reduced homology rank in
// dimension i-1 of the divisor complex of s, collected over all s in S up to
// F + Sigma (the numerator degree). The assembled table must reproduce the
// numerator through Q(z) = sum_i (-1)^i sum_{C in B_i} z^C, which is checked
// here against the independently computed numerator.
inline GradedBettiTable graded_betti(const NumericalSemigroup& s) {
    if (s.edim() > detail::kMaxComplexVertices)
        throw InputTooLarge("embedding dimension beyond complex support");
    const int m = s.edim();
    GradedBettiTable out;
    out.frobenius = s.frobenius();
    out.sigma = s.sigma();
    out.tables.assign(static_cast<std::size_t>(m), IntMultiset{});

    const auto sums = detail::subset_sums(s.generators());
    const long long top = out.frobenius + out.sigma;
    for (long long deg = 0; deg <= top; ++deg) {
        if (!s.contains(deg)) continue;
        const auto complex = detail::divisor_complex_from_sums(s, sums, deg);
        const auto ranks = reduced_homology_ranks(complex);
        for (int i = 0; i < m; ++i) {
            const long long r = ranks[static_cast<std::size_t>(i)];
            if (r > 0) out.tables[static_cast<std::size_t>(i)].add(deg, r);
        }
    }

    IntPolynomial alternating;
    for (int i = 0; i < m; ++i) {
        const auto p = IntPolynomial::from_multiset(out.tables[static_cast<std::size_t>(i)]);
        alternating = i % 2 == 0 ? alternating + p : alternating - p;
    }
    if (alternating != s.numerator_q())
        throw InternalInconsistency("Betti table does not reproduce the numerator");
    return out;
}

// Conjugate degree multisets: C -> F + Sigma - C, multiplicities preserved.
inline std::vector<IntMultiset> conjugate_betti(const GradedBettiTable& table) {
    const Integer fs = Integer(table.frobenius) + table.sigma;
    std::vector<IntMultiset> out;
    out.reserve(table.tables.size());
    for (const auto& b : table.tables) {
        IntMultiset conj;
        for (const auto& [v, k] : b.counts()) conj.add(fs - v, k);
        out.push_back(std::move(conj));
    }
    return out;
}

}  // namespace nsg
