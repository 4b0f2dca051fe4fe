#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "nsg/errors.hpp"
#include "nsg/multiset.hpp"
#include "nsg/polynomial.hpp"
#include "nsg/semigroup.hpp"

namespace nsg {

// Gap split: g with F-g in S versus h with F-h not in S.
struct GapDecomposition {
    std::vector<long long> delta_g;  // ascending
    std::vector<long long> delta_h;  // ascending
    long long gamma = 0;             // #delta_h
};

struct SemigroupClass {
    bool symmetric = false;
    bool pseudosymmetric = false;
    bool almost_symmetric = false;
};

struct PairingCheck {
    bool fixed_point_present = false;  // F/2 among S' \ {F}
    bool parity_ok = false;            // fixed point present iff t even
};

struct Pseudo3DReport {
    long long frobenius_closed = 0;
    long long genus_closed = 0;
    std::vector<long long> syzygy_degrees;   // e_i = d_j + d_k + F/2, ascending
    Integer d1 = 0, d2 = 0, d3 = 0;          // elementary symmetric in generators
    Integer e1 = 0, e2 = 0, e3 = 0;          // elementary symmetric in e_i
    bool symmetric_function_identities = false;
    bool betti1_matches = false;
};

inline GapDecomposition decompose_gaps(const NumericalSemigroup& s,
                                       const GapProfile& profile) {
    GapDecomposition out;
    for (long long g : profile.gaps) {
        if (s.contains(profile.frobenius - g))
            out.delta_g.push_back(g);
        else
            out.delta_h.push_back(g);
    }
    out.gamma = static_cast<long long>(out.delta_h.size());
    return out;
}

inline SemigroupClass classify(const GapProfile& profile,
                               const GapDecomposition& decomposition) {
    SemigroupClass out;
    out.symmetric = decomposition.delta_h.empty();
    out.pseudosymmetric = profile.frobenius % 2 == 0 &&
                          decomposition.delta_h.size() == 1 &&
                          decomposition.delta_h.front() == profile.frobenius / 2;
    // S' \ {F} equals Delta_H as sets
    std::vector<long long> sprime_rest;
    for (long long x : profile.pseudo_frobenius)
        if (x != profile.frobenius) sprime_rest.push_back(x);
    out.almost_symmetric = sprime_rest == decomposition.delta_h;
    return out;
}

namespace detail {

inline IntPolynomial indicator_polynomial(const std::vector<long long>& xs) {
    IntPolynomial p;
    for (long long x : xs) p = p + IntPolynomial::monomial(x, 1);
    return p;
}

}  // namespace detail

// Theorem on the Delta_H generating function, normalized to a polynomial
// identity: (sum_{h in Delta_H} z^h) * prod(1 - z^{d_j})
//           = -Q(z) - (-1)^m * z^{F+Sigma} Q(1/z).
// Holds for every numerical semigroup.
inline bool check_theorem1(const NumericalSemigroup& s,
                           const GapDecomposition& decomposition,
                           const IntPolynomial& q) {
    const Integer fs = Integer(s.frobenius()) + s.sigma();
    const IntPolynomial lhs =
        detail::indicator_polynomial(decomposition.delta_h) *
        product_one_minus_z_pow(s.generators());
    IntPolynomial rhs = -q;
    const IntPolynomial rev = q.reversed(fs);
    rhs = s.edim() % 2 == 0 ? rhs - rev : rhs + rev;
    return lhs == rhs;
}

// Duality relation for the numerator, as an exact polynomial identity:
// Q(z) + (-1)^m z^{F+Sigma} Q(1/z) + (sum_{F_j in S'\{F}} z^{F_j}) * prod(1-z^{d_j}) = 0.
// Characterizes almost symmetric semigroups; exposed for any input so
// enumeration can use identity failure as a negative oracle. The third term
// vanishes for symmetric semigroups and is z^{F/2} * prod for pseudosymmetric.
inline bool check_duality(const NumericalSemigroup& s, const GapProfile& profile,
                          const IntPolynomial& q) {
    const Integer fs = Integer(s.frobenius()) + s.sigma();
    std::vector<long long> sprime_rest;
    for (long long x : profile.pseudo_frobenius)
        if (x != profile.frobenius) sprime_rest.push_back(x);
    const IntPolynomial rev = q.reversed(fs);
    IntPolynomial acc = s.edim() % 2 == 0 ? q + rev : q - rev;
    acc = acc + detail::indicator_polynomial(sprime_rest) *
                    product_one_minus_z_pow(s.generators());
    return acc.is_zero();
}

// Self-duality of S' \ {F} under F_j -> F - F_j, with the fixed-point parity
// statement: F/2 occurs iff t is even. Throws PairingBroken with a witness
// when the involution fails (the input is then not almost symmetric).
inline PairingCheck check_self_duality_pairing(const GapProfile& profile) {
    std::vector<long long> rest;
    for (long long x : profile.pseudo_frobenius)
        if (x != profile.frobenius) rest.push_back(x);
    PairingCheck out;
    for (long long x : rest) {
        if (!std::binary_search(rest.begin(), rest.end(), profile.frobenius - x))
            throw PairingBroken("element " + std::to_string(x) +
                                " has no partner " +
                                std::to_string(profile.frobenius - x));
        if (2 * x == profile.frobenius) out.fixed_point_present = true;
    }
    out.parity_ok = out.fixed_point_present == (profile.type % 2 == 0);
    return out;
}

// Closed forms for 3D pseudosymmetric semigroups: the Frobenius number from
// the radical expression in the elementary symmetric functions of the
// generators, the genus, and the three first-syzygy degrees d_j + d_k + F/2.
inline Pseudo3DReport pseudo3d_closed_form(const NumericalSemigroup& s,
                                           const GapProfile& profile,
                                           const SemigroupClass& cls,
                                           const IntMultiset& betti1_degrees) {
    if (s.edim() != 3 || !cls.pseudosymmetric)
        throw NotPseudosymmetric3D(s.edim() == 3 ? "not pseudosymmetric"
                                                 : "edim is not 3");
    const auto& d = s.generators();
    Pseudo3DReport out;
    out.d1 = Integer(d[0]) + d[1] + d[2];
    out.d2 = Integer(d[0]) * d[1] + Integer(d[1]) * d[2] + Integer(d[2]) * d[0];
    out.d3 = Integer(d[0]) * d[1] * d[2];

    const Integer disc = out.d1 * out.d1 + 4 * (out.d3 - out.d2);
    Integer root;
    if (!perfect_square(disc, root))
        throw InternalInconsistency("pseudosymmetric discriminant is not a square");
    out.frobenius_closed = to_int64(-out.d1 + root);
    if (out.frobenius_closed != profile.frobenius)
        throw InternalInconsistency("closed-form Frobenius mismatch");
    out.genus_closed = 1 + out.frobenius_closed / 2;
    if (out.genus_closed != profile.genus)
        throw InternalInconsistency("closed-form genus mismatch");

    const long long half = profile.frobenius / 2;
    out.syzygy_degrees = {d[0] + d[1] + half, d[0] + d[2] + half, d[1] + d[2] + half};
    std::sort(out.syzygy_degrees.begin(), out.syzygy_degrees.end());
    out.betti1_matches =
        IntMultiset::from_elements(out.syzygy_degrees) == betti1_degrees;

    const Integer e[3] = {Integer(out.syzygy_degrees[0]),
                          Integer(out.syzygy_degrees[1]),
                          Integer(out.syzygy_degrees[2])};
    out.e1 = e[0] + e[1] + e[2];
    out.e2 = e[0] * e[1] + e[1] * e[2] + e[2] * e[0];
    out.e3 = e[0] * e[1] * e[2];

    // E_k in terms of D_k and F, plus the generic 3D formulas for F and G.
    // F is even here, so u = D1 + F/2 is exact.
    const Integer f = out.frobenius_closed;
    const Integer u = out.d1 + f / 2;
    bool ok = 2 * out.e1 == 4 * out.d1 + 3 * f;
    ok = ok && out.e2 == 3 * u * u - 2 * out.d1 * u + out.d2;
    ok = ok && out.e3 == u * u * u - out.d1 * u * u + out.d2 * u - out.d3;
    Integer root2;
    ok = ok && perfect_square(out.e1 * out.e1 - 4 * out.e2 + 4 * out.d3, root2);
    ok = ok && 2 * f == out.e1 + root2 - 2 * out.d1;
    ok = ok && out.e3 % out.d3 == 0 &&
         2 * profile.genus == 1 + out.e1 - out.e3 / out.d3 - out.d1;
    out.symmetric_function_identities = ok;
    return out;
}

}  // namespace nsg
