#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <numeric>
#include <vector>

#include "nsg/errors.hpp"

namespace nsg {

// Exact signed integer used for multiset elements/multiplicities and
// polynomial exponents/coefficients. Degrees at desk scale fit in 64 bits,
// but the kernel contracts do not assume that (conjugation can be applied
// to user-supplied input), hence an arbitrary-width type.
using Integer = boost::multiprecision::cpp_int;

inline Integer binomial(long long n, long long k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    Integer r = 1;
    for (long long i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

inline Integer pow2(long long e) {
    Integer r = 1;
    return r << e;
}

// Floor square root plus perfect-square test, all exact.
inline bool perfect_square(const Integer& x, Integer& root) {
    if (x < 0) return false;
    root = boost::multiprecision::sqrt(x);
    return root * root == x;
}

inline bool fits_int64(const Integer& v) {
    static const Integer lo = std::numeric_limits<std::int64_t>::min();
    static const Integer hi = std::numeric_limits<std::int64_t>::max();
    return v >= lo && v <= hi;
}

inline std::int64_t to_int64(const Integer& v) {
    if (!fits_int64(v)) throw InputTooLarge("value exceeds 64-bit range");
    return v.convert_to<std::int64_t>();
}

inline long long gcd_of(const std::vector<long long>& xs) {
    long long g = 0;
    for (long long x : xs) g = std::gcd(g, x);
    return g;
}

}  // namespace nsg
