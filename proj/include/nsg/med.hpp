#pragma once

#include <numeric>
#include <set>
#include <vector>

#include "nsg/classification.hpp"
#include "nsg/errors.hpp"
#include "nsg/master_equation.hpp"
#include "nsg/polynomial.hpp"
#include "nsg/resolution.hpp"
#include "nsg/semigroup.hpp"

namespace nsg {

// Closed-form data for a maximal-embedding-dimension semigroup (d1 = m),
// cross-checked against the general-purpose computations.
struct MedReport {
    bool is_med = false;
    long long closed_frobenius = 0;           // d_m - m
    Integer closed_genus = 0;                 // (sum_{k>=2} d_k)/m - (m-1)/2
    std::vector<Integer> closed_betti;        // beta_k = k C(m,k+1), k = 0..m-1
    std::vector<long long> delta_h_closed;    // d_j - m for 2 <= j <= m-1
    long long closed_type = 0;                // m - 1
    bool almost_symmetric_med = false;        // pairing criterion
    std::vector<IntPolynomial> i_parts;       // I_{m,k}, k = 1..m-1
    std::vector<IntPolynomial> j_parts;       // J_{m,k}, k = 1..m-2
};

// Maximal embedding dimension: d1 = m. The closed forms below presume a
// non-trivial semigroup, so edim 1 is excluded.
inline bool is_med(const NumericalSemigroup& s) {
    return s.edim() >= 2 && s.multiplicity() == s.edim();
}

// Pairing criterion: almost symmetric iff d_j + d_{m-j+1} = m + d_m for all j.
inline bool med_almost_symmetric(const NumericalSemigroup& s) {
    if (!is_med(s)) throw NotMed("not a maximal-edim semigroup");
    const auto& d = s.generators();
    const int m = s.edim();
    for (int j = 0; j < m; ++j)
        if (d[static_cast<std::size_t>(j)] + d[static_cast<std::size_t>(m - 1 - j)] !=
            m + d.back())
            return false;
    return true;
}

namespace detail {

// I_{m,k}: one doubled generator plus k-1 further distinct ones, all from
// d_2..d_m. J_{m,k}: coefficient k on every (k+1)-fold sum from d_2..d_m.
inline IntPolynomial med_i_part(const std::vector<long long>& gens, int k) {
    const int m = static_cast<int>(gens.size());
    IntPolynomial out;
    for (int dbl = 1; dbl < m; ++dbl) {
        std::vector<long long> rest;
        for (int j = 1; j < m; ++j)
            if (j != dbl) rest.push_back(gens[static_cast<std::size_t>(j)]);
        const IntMultiset sums = generator_sum_part(rest, k - 1);
        for (const auto& [v, c] : sums.counts())
            out = out + IntPolynomial::monomial(
                            v + 2 * gens[static_cast<std::size_t>(dbl)], c);
    }
    return out;
}

inline IntPolynomial med_j_part(const std::vector<long long>& gens, int k) {
    std::vector<long long> tail(gens.begin() + 1, gens.end());
    const IntMultiset sums = generator_sum_part(tail, k + 1);
    IntPolynomial out;
    for (const auto& [v, c] : sums.counts())
        out = out + IntPolynomial::monomial(v, Integer(k) * c);
    return out;
}

}  // namespace detail

// Numerator assembled from the partial polynomials
//   Q = 1 + sum_{k=1}^{m-2} (-1)^k [I_{m,k} + J_{m,k}] + (-1)^{m-1} I_{m,m-1},
// then checked against the generic numerator.
inline IntPolynomial med_numerator(const NumericalSemigroup& s) {
    if (!is_med(s)) throw NotMed("not a maximal-edim semigroup");
    const auto& gens = s.generators();
    const int m = s.edim();
    IntPolynomial q = IntPolynomial::constant(1);
    for (int k = 1; k <= m - 2; ++k) {
        const IntPolynomial part =
            detail::med_i_part(gens, k) + detail::med_j_part(gens, k);
        q = k % 2 == 1 ? q - part : q + part;
    }
    const IntPolynomial top = detail::med_i_part(gens, m - 1);
    q = (m - 1) % 2 == 1 ? q - top : q + top;
    if (q != s.numerator_q())
        throw InternalInconsistency("maximal-edim numerator mismatch");
    return q;
}

// All closed forms, each cross-checked against the generic computation.
// The Betti cross-check reuses a precomputed table when the caller has one.
inline MedReport med_invariants(const NumericalSemigroup& s,
                                const GradedBettiTable* table = nullptr) {
    if (!is_med(s)) throw NotMed("not a maximal-edim semigroup");
    const auto& d = s.generators();
    const int m = s.edim();
    MedReport out;
    out.is_med = true;

    out.closed_frobenius = d.back() - m;
    if (out.closed_frobenius != s.frobenius())
        throw InternalInconsistency("closed Frobenius mismatch");

    Integer tail_sum = 0;
    for (int j = 1; j < m; ++j) tail_sum += d[static_cast<std::size_t>(j)];
    const Integer two_g = 2 * tail_sum - Integer(m) * (m - 1);
    if (two_g % (2 * m) != 0) throw InternalInconsistency("closed genus not integral");
    out.closed_genus = two_g / (2 * m);

    const GapProfile profile = s.gap_profile();
    if (out.closed_genus != profile.genus)
        throw InternalInconsistency("closed genus mismatch");

    out.closed_type = m - 1;
    if (out.closed_type != profile.type)
        throw InternalInconsistency("closed type mismatch");

    // Apery set is {0, d_2, ..., d_m}
    IntMultiset expected_apery;
    expected_apery.add(0);
    for (int j = 1; j < m; ++j) expected_apery.add(d[static_cast<std::size_t>(j)]);
    if (expected_apery != s.apery_set())
        throw InternalInconsistency("Apery structure mismatch");

    // S' = {d_j - m : 2 <= j <= m}; the closed Delta_H candidate drops d_m - m
    std::vector<long long> sprime_closed;
    for (int j = 1; j < m; ++j)
        sprime_closed.push_back(d[static_cast<std::size_t>(j)] - m);
    if (sprime_closed != profile.pseudo_frobenius)
        throw InternalInconsistency("closed pseudo-Frobenius mismatch");
    out.delta_h_closed.assign(sprime_closed.begin(), sprime_closed.end() - 1);

    const GapDecomposition decomposition = decompose_gaps(s, profile);
    if (m >= 2) {
        if ((2 * tail_sum) % m != 0)
            throw InternalInconsistency("closed gap-count not integral");
        const Integer gamma_closed = 2 * tail_sum / m - d.back();
        if (gamma_closed != decomposition.gamma)
            throw InternalInconsistency("closed gap-count mismatch");
        if (decomposition.gamma > 0) {
            if (decomposition.delta_h.back() != d[static_cast<std::size_t>(m - 2)] - m ||
                decomposition.delta_h.front() !=
                    d.back() - d[static_cast<std::size_t>(m - 2)])
                throw InternalInconsistency("closed Delta_H extrema mismatch");
        }
    }

    out.closed_betti.push_back(1);
    for (int k = 1; k <= m - 1; ++k) out.closed_betti.push_back(Integer(k) * binomial(m, k + 1));
    if (table) {
        if (table->betti() != out.closed_betti)
            throw InternalInconsistency("closed Betti numbers mismatch");
    }

    out.almost_symmetric_med = med_almost_symmetric(s);
    const SemigroupClass cls = classify(profile, decomposition);
    if (out.almost_symmetric_med != cls.almost_symmetric)
        throw InternalInconsistency("pairing criterion disagrees with classification");

    for (int k = 1; k <= m - 1; ++k) out.i_parts.push_back(detail::med_i_part(d, k));
    for (int k = 1; k <= m - 2; ++k) out.j_parts.push_back(detail::med_j_part(d, k));
    return out;
}

// Family (t+1, t+1+g/t, ..., t+1+g): almost symmetric of maximal edim with
// S' = {g/t, 2g/t, ..., g}. Degenerate tuples (g = -1 or 0) fall through to
// ordinary construction errors.
inline NumericalSemigroup prop1_family(long long t, long long g) {
    if (t < 1) throw BadParameters("t must be positive");
    if (g < -1) throw BadParameters("g must be at least -1");
    if (g % t != 0) throw BadParameters("t must divide g");
    const long long step = g / t;
    if (std::gcd(t + 1, step < 0 ? -step : step) != 1)
        throw BadParameters("gcd(t+1, g/t) must be 1");
    std::vector<long long> gens;
    for (long long k = 0; k <= t; ++k) gens.push_back(t + 1 + k * step);
    return NumericalSemigroup(gens);
}

// Arithmetic family (2n+1, 2n+1+2a, ..., 2n+1+4na) with gcd(2n+1, a) = 1.
inline NumericalSemigroup arith_med_family(long long n, long long a) {
    if (n < 1 || a < 1) throw BadParameters("n and a must be positive");
    if (std::gcd(2 * n + 1, a) != 1) throw BadParameters("gcd(2n+1, a) must be 1");
    std::vector<long long> gens;
    for (long long k = 0; k <= 2 * n; ++k) gens.push_back(2 * n + 1 + 2 * k * a);
    return NumericalSemigroup(gens);
}

// Odd-edim almost symmetric maximal-edim semigroups have odd d_m and
// generator sum divisible by m.
inline bool corollary3_check(const NumericalSemigroup& s) {
    if (!is_med(s)) throw NotMed("not a maximal-edim semigroup");
    if (s.edim() % 2 == 0) throw PreconditionFailed("edim must be odd");
    if (!med_almost_symmetric(s)) throw PreconditionFailed("not almost symmetric");
    return s.generators().back() % 2 == 1 && s.sigma() % s.edim() == 0;
}

// For almost symmetric maximal-edim semigroups the two meet cardinalities
// coincide (delta = 0). For odd edim, an empty underlying-set intersection
// of the parity unions forces wp = 0; checked as a diagnostic implication.
inline bool theorem8_check(const NumericalSemigroup& s, const MSide& ms,
                           const XSide& xs, const GradedBettiTable& table) {
    if (!is_med(s)) throw NotMed("not a maximal-edim semigroup");
    if (!med_almost_symmetric(s)) throw PreconditionFailed("not almost symmetric");
    bool ok = ms.ell == xs.wp;
    const int m = s.edim();
    if (m >= 3 && m % 2 == 1) {
        const auto conj = conjugate_betti(table);
        const int n = (m - 1) / 2;
        std::set<Integer> side1, side2;
        for (int i = 1; i <= n; ++i)
            for (const auto& [v, c] : table.tables[static_cast<std::size_t>(2 * i - 1)].counts())
                side1.insert(v);
        for (int i = 1; i <= n - 1; ++i)
            for (const auto& [v, c] : conj[static_cast<std::size_t>(2 * i)].counts())
                side1.insert(v);
        for (int i = 1; i <= n - 1; ++i)
            for (const auto& [v, c] : table.tables[static_cast<std::size_t>(2 * i)].counts())
                side2.insert(v);
        for (int i = 1; i <= n; ++i)
            for (const auto& [v, c] : conj[static_cast<std::size_t>(2 * i - 1)].counts())
                side2.insert(v);
        bool set_meet_empty = true;
        for (const auto& v : side1)
            if (side2.count(v)) {
                set_meet_empty = false;
                break;
            }
        if (set_meet_empty && xs.wp != 0) ok = false;
    }
    return ok;
}

}  // namespace nsg
