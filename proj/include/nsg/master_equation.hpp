#pragma once

#include <cstdint>
#include <vector>

#include "nsg/classification.hpp"
#include "nsg/errors.hpp"
#include "nsg/multiset.hpp"
#include "nsg/resolution.hpp"
#include "nsg/semigroup.hpp"

namespace nsg {

// Gap-and-generator side of the master equation.
struct MSide {
    IntMultiset m1;   // L_o = D_o (+) Delta_H
    IntMultiset m2;   // L_e = D_e (+) Delta_H
    IntMultiset m12;  // meet
    Integer ell = 0;  // #m12
};

// Syzygy-degree side of the master equation.
struct XSide {
    IntMultiset x1;
    IntMultiset x2;
    IntMultiset x12;
    Integer wp = 0;  // #x12; called rho in the maximal-edim context
};

struct MasterCheck {
    bool equation_ok = false;   // M1 v X1 == M2 v X2
    bool theorem4_ok = false;   // X1\X12 == M2\M12 and X2\X12 == M1\M12
    IntMultiset lhs_surplus;    // witness: (M1 v X1) minus the common part
    IntMultiset rhs_surplus;
};

// Multiset of all i-fold sums of distinct generators, one occurrence per
// index subset.
inline IntMultiset generator_sum_part(const std::vector<long long>& gens, int i) {
    const int m = static_cast<int>(gens.size());
    IntMultiset out;
    if (i < 0 || i > m) return out;
    std::vector<int> idx(static_cast<std::size_t>(i));
    // iterate i-subsets in lexicographic order
    for (int j = 0; j < i; ++j) idx[static_cast<std::size_t>(j)] = j;
    while (true) {
        long long sum = 0;
        for (int j : idx) sum += gens[static_cast<std::size_t>(j)];
        out.add(sum);
        int pos = i - 1;
        while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == m - i + pos) --pos;
        if (pos < 0) break;
        ++idx[static_cast<std::size_t>(pos)];
        for (int j = pos + 1; j < i; ++j)
            idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
    return out;
}

inline IntMultiset generator_sums_odd(const std::vector<long long>& gens) {
    IntMultiset out;
    const int m = static_cast<int>(gens.size());
    for (int i = 1; i <= m - 1; i += 2) out = out.join(generator_sum_part(gens, i));
    return out;
}

inline IntMultiset generator_sums_even(const std::vector<long long>& gens) {
    IntMultiset out;
    const int m = static_cast<int>(gens.size());
    for (int i = 2; i <= m - 1; i += 2) out = out.join(generator_sum_part(gens, i));
    return out;
}

// D_e ^ D_o over the pure generator-sum multisets; empty for edim 3 and 4,
// cardinality at most 1 for edim 5.
inline IntMultiset d_eo(const NumericalSemigroup& s) {
    return generator_sums_even(s.generators()).meet(generator_sums_odd(s.generators()));
}

inline MSide build_m_side(const NumericalSemigroup& s,
                          const GapDecomposition& decomposition) {
    if (decomposition.delta_h.empty())
        throw SymmetricInput("Delta_H is empty; the construction is vacuous");
    const IntMultiset dh = IntMultiset::from_elements(decomposition.delta_h);
    MSide out;
    out.m1 = generator_sums_odd(s.generators()).sumset_join(dh);
    out.m2 = generator_sums_even(s.generators()).sumset_join(dh);
    out.m12 = out.m1.meet(out.m2);
    out.ell = out.m12.cardinality();
    return out;
}

// X side built from the Betti tables of indices 1..m-2 and their conjugates.
// For even edim the odd-index tables pair with their own conjugates; for odd
// edim the parities cross. The top index m-1 never contributes: its terms
// cancel inside the master equation before the recast.
inline XSide build_x_side(const GradedBettiTable& table) {
    const int m = static_cast<int>(table.tables.size());
    if (m < 3) throw PreconditionFailed("X side needs edim at least 3");
    const auto conj = conjugate_betti(table);

    IntMultiset b_odd, b_even, c_odd, c_even;
    if (m % 2 == 0) {
        const int n = m / 2;
        for (int i = 1; i <= n - 1; ++i) {
            b_odd = b_odd.join(table.tables[static_cast<std::size_t>(2 * i - 1)]);
            c_odd = c_odd.join(conj[static_cast<std::size_t>(2 * i - 1)]);
            b_even = b_even.join(table.tables[static_cast<std::size_t>(2 * i)]);
            c_even = c_even.join(conj[static_cast<std::size_t>(2 * i)]);
        }
    } else {
        const int n = (m - 1) / 2;
        for (int i = 1; i <= n; ++i) {
            b_odd = b_odd.join(table.tables[static_cast<std::size_t>(2 * i - 1)]);
            c_odd = c_odd.join(conj[static_cast<std::size_t>(2 * i - 1)]);
        }
        for (int i = 1; i <= n - 1; ++i) {
            b_even = b_even.join(table.tables[static_cast<std::size_t>(2 * i)]);
            c_even = c_even.join(conj[static_cast<std::size_t>(2 * i)]);
        }
    }

    XSide out;
    if (m % 2 == 0) {
        out.x1 = b_odd.join(c_odd);
        out.x2 = b_even.join(c_even);
    } else {
        out.x1 = b_odd.join(c_even);
        out.x2 = b_even.join(c_odd);
    }
    out.x12 = out.x1.meet(out.x2);
    out.wp = out.x12.cardinality();
    return out;
}

// Master multiset equality M1 v X1 == M2 v X2, plus the difference
// conclusions X1\X12 == M2\M12 and X2\X12 == M1\M12. Applied uniformly even
// when a meet is empty. Witness surpluses are kept for failure reports.
inline MasterCheck check_master_equation(const MSide& ms, const XSide& xs) {
    MasterCheck out;
    const IntMultiset lhs = ms.m1.join(xs.x1);
    const IntMultiset rhs = ms.m2.join(xs.x2);
    out.equation_ok = lhs == rhs;
    if (!out.equation_ok) {
        const IntMultiset common = lhs.meet(rhs);
        out.lhs_surplus = lhs.difference(common);
        out.rhs_surplus = rhs.difference(common);
    }
    out.theorem4_ok = xs.x1.difference(xs.x12) == ms.m2.difference(ms.m12) &&
                      xs.x2.difference(xs.x12) == ms.m1.difference(ms.m12);
    return out;
}

// Betti-number sums split by index parity, with delta = wp - ell:
//   m = 2n:   beta_1+...+beta_{2n-3} = gamma(4^{n-1}-1) + delta/2
//             beta_2+...+beta_{2n-2} = gamma 4^{n-1}    + delta/2
//   m = 2n+1: beta_1+...+beta_{2n-1} = gamma 2^{2n-1}   + delta/2 + 1
//             beta_2+...+beta_{2n-2} = gamma(2^{2n-1}-1)+ delta/2 - 1
// For a pseudosymmetric semigroup of edim 4 additionally beta_1 = 3 + wp/2
// and beta_2 = 4 + wp/2.
inline bool check_betti_sums(const std::vector<Integer>& betti, const Integer& gamma,
                             const Integer& delta, int m, bool pseudosymmetric,
                             const Integer& wp) {
    if (m < 3) throw PreconditionFailed("Betti sums need edim at least 3");
    if (delta % 2 != 0) throw ParityViolation("delta is odd");
    Integer odd_sum = 0, even_sum = 0;
    const int cutoff = m - 2;  // indices 1..m-2 enter the sums
    for (int i = 1; i <= cutoff; ++i) {
        if (i % 2 == 1)
            odd_sum += betti[static_cast<std::size_t>(i)];
        else
            even_sum += betti[static_cast<std::size_t>(i)];
    }
    const Integer half = delta / 2;
    bool ok;
    if (m % 2 == 0) {
        const int n = m / 2;
        const Integer p = pow2(2 * (n - 1));  // 4^{n-1}
        ok = odd_sum == gamma * (p - 1) + half && even_sum == gamma * p + half;
    } else {
        const int n = (m - 1) / 2;
        const Integer p = pow2(2 * n - 1);  // 2^{2n-1}
        ok = odd_sum == gamma * p + half + 1 && even_sum == gamma * (p - 1) + half - 1;
    }
    if (m == 4 && pseudosymmetric) {
        if (wp % 2 != 0) throw ParityViolation("wp is odd");
        ok = ok && betti[1] == 3 + wp / 2 && betti[2] == 4 + wp / 2;
    }
    return ok;
}

// delta <= (d1 - gamma) 2^{m-1} - 2m
inline bool check_corollary2(const Integer& delta, long long d1, const Integer& gamma,
                             int m) {
    return delta <= (Integer(d1) - gamma) * pow2(m - 1) - 2 * m;
}

}  // namespace nsg
