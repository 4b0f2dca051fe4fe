#pragma once

#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "nsg/errors.hpp"
#include "nsg/integer.hpp"
#include "nsg/multiset.hpp"

namespace nsg {

// Sparse exact-integer univariate polynomial: exponent -> non-zero
// coefficient, exponents >= 0. No floating point anywhere; iteration is in
// ascending exponent order so rendered output is deterministic.
template <class Int>
class BasicPolynomial {
public:
    using map_type = std::map<Int, Int>;

    BasicPolynomial() = default;

    static BasicPolynomial zero() { return {}; }

    static BasicPolynomial constant(const Int& c) { return monomial(0, c); }

    static BasicPolynomial monomial(const Int& exponent, const Int& coeff) {
        if (exponent < 0) throw NegativeExponent("monomial exponent");
        BasicPolynomial p;
        if (coeff != 0) p.terms_[exponent] = coeff;
        return p;
    }

    // multiplicity becomes coefficient; requires all elements >= 0
    static BasicPolynomial from_multiset(const BasicMultiset<Int>& m) {
        BasicPolynomial p;
        for (const auto& [v, k] : m.counts()) {
            if (v < 0) throw NegativeExponent("multiset element below zero");
            p.terms_[v] = k;
        }
        return p;
    }

    // inverse of from_multiset; requires all coefficients >= 0
    BasicMultiset<Int> to_multiset() const {
        BasicMultiset<Int> m;
        for (const auto& [e, c] : terms_) {
            if (c < 0) throw NegativeCoefficient("coefficient of z^" + e.str());
            m.add(e, c);
        }
        return m;
    }

    bool is_zero() const { return terms_.empty(); }
    const map_type& terms() const { return terms_; }

    Int coeff(const Int& exponent) const {
        auto it = terms_.find(exponent);
        return it == terms_.end() ? Int(0) : it->second;
    }

    // degree of the zero polynomial is "none"
    std::optional<Int> degree() const {
        if (terms_.empty()) return std::nullopt;
        return terms_.rbegin()->first;
    }

    // value at z = 1
    Int coefficient_sum() const {
        Int s = 0;
        for (const auto& [e, c] : terms_) s += c;
        return s;
    }

    std::size_t term_count() const { return terms_.size(); }

    bool operator==(const BasicPolynomial& o) const { return terms_ == o.terms_; }
    bool operator!=(const BasicPolynomial& o) const { return !(*this == o); }

    BasicPolynomial operator+(const BasicPolynomial& o) const {
        BasicPolynomial out = *this;
        for (const auto& [e, c] : o.terms_) out.add_term(e, c);
        return out;
    }

    BasicPolynomial operator-() const {
        BasicPolynomial out;
        for (const auto& [e, c] : terms_) out.terms_[e] = -c;
        return out;
    }

    BasicPolynomial operator-(const BasicPolynomial& o) const {
        BasicPolynomial out = *this;
        for (const auto& [e, c] : o.terms_) out.add_term(e, -c);
        return out;
    }

    BasicPolynomial operator*(const BasicPolynomial& o) const {
        BasicPolynomial out;
        for (const auto& [e1, c1] : terms_)
            for (const auto& [e2, c2] : o.terms_) out.add_term(e1 + e2, c1 * c2);
        return out;
    }

    // z^n * p(1/z): coefficient of z^k moves to z^(n-k). Involution when
    // n >= deg p is applied twice and p has a non-zero constant term.
    BasicPolynomial reversed(const Int& n) const {
        auto d = degree();
        if (d && *d > n) throw DegreeOverflow("reversal degree below deg p");
        if (n < 0) throw NegativeExponent("reversal degree");
        BasicPolynomial out;
        for (const auto& [e, c] : terms_) out.terms_[n - e] = c;
        return out;
    }

    // drop all terms with exponent > n
    BasicPolynomial truncated(const Int& n) const {
        BasicPolynomial out;
        for (const auto& [e, c] : terms_) {
            if (e > n) break;
            out.terms_[e] = c;
        }
        return out;
    }

    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [e, c] : terms_) {
            Int a = c < 0 ? Int(-c) : c;
            if (first) {
                if (c < 0) os << '-';
                first = false;
            } else {
                os << (c < 0 ? " - " : " + ");
            }
            if (e == 0) {
                os << a;
            } else {
                if (a != 1) os << a;
                os << 'z';
                if (e != 1) os << '^' << e;
            }
        }
        return os.str();
    }

private:
    void add_term(const Int& e, const Int& c) {
        if (c == 0) return;
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_[e] = c;
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    map_type terms_;
};

using IntPolynomial = BasicPolynomial<Integer>;

// prod_{j} (1 - z^{d_j}); requires all d_j >= 1
template <class Int, class Range>
BasicPolynomial<Int> product_one_minus_z_pow(const Range& ds) {
    auto p = BasicPolynomial<Int>::constant(1);
    for (const auto& d : ds) {
        if (Int(d) < 1) throw NegativeExponent("factor exponent below one");
        p = p * (BasicPolynomial<Int>::constant(1) -
                 BasicPolynomial<Int>::monomial(Int(d), 1));
    }
    return p;
}

inline IntPolynomial product_one_minus_z_pow(const std::vector<long long>& ds) {
    return product_one_minus_z_pow<Integer>(ds);
}

}  // namespace nsg
