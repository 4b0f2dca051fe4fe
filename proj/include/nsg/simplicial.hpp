#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <vector>

#include "nsg/errors.hpp"
#include "nsg/integer.hpp"

namespace nsg {

// Abstract simplicial complex on vertices 0..m-1 with faces stored as bit
// masks. The face set must be closed under subsets; constructors here do not
// re-check that (the divisor complex is closed by construction).
class SimplicialComplex {
public:
    SimplicialComplex(int vertices, std::vector<std::uint32_t> faces)
        : vertices_(vertices), faces_(std::move(faces)) {
        std::sort(faces_.begin(), faces_.end());
    }

    int vertex_count() const { return vertices_; }
    const std::vector<std::uint32_t>& faces() const { return faces_; }

    bool has_face(std::uint32_t mask) const {
        return std::binary_search(faces_.begin(), faces_.end(), mask);
    }

    // A cone (some vertex lies in every maximal face) has vanishing reduced
    // homology in all dimensions; cheap test used to skip rank computations.
    bool is_cone() const {
        std::uint32_t common = ~std::uint32_t{0};
        for (std::uint32_t f : faces_) {
            bool maximal = true;
            for (int v = 0; v < vertices_ && maximal; ++v)
                if (!(f >> v & 1U) && has_face(f | (1U << v))) maximal = false;
            if (maximal) {
                common &= f;
                if (common == 0) return false;
            }
        }
        return common != 0 && !faces_.empty();
    }

private:
    int vertices_;
    std::vector<std::uint32_t> faces_;  // sorted masks; includes 0 for the empty face
};

namespace detail {

struct RankOverflow {};

// 64-bit integer that throws RankOverflow instead of wrapping. Enough of an
// interface for fraction-free elimination.
struct Checked64 {
    std::int64_t v = 0;
    Checked64() = default;
    Checked64(std::int64_t x) : v(x) {}
    friend Checked64 operator*(Checked64 a, Checked64 b) {
        std::int64_t r;
        if (__builtin_mul_overflow(a.v, b.v, &r)) throw RankOverflow{};
        return r;
    }
    friend Checked64 operator-(Checked64 a, Checked64 b) {
        std::int64_t r;
        if (__builtin_sub_overflow(a.v, b.v, &r)) throw RankOverflow{};
        return r;
    }
    friend Checked64 operator/(Checked64 a, Checked64 b) { return a.v / b.v; }
    friend bool operator==(Checked64 a, std::int64_t b) { return a.v == b; }
    friend bool operator<(Checked64 a, Checked64 b) { return a.v < b.v; }
    Checked64 abs() const {
        if (v == std::numeric_limits<std::int64_t>::min()) throw RankOverflow{};
        return v < 0 ? Checked64(-v) : *this;
    }
};

inline Integer abs_of(const Integer& x) { return x < 0 ? Integer(-x) : x; }
inline Checked64 abs_of(const Checked64& x) { return x.abs(); }
inline bool is_one(const Integer& x) { return x == 1; }
inline bool is_one(const Checked64& x) { return x.v == 1; }
inline bool is_minus_one(const Integer& x) { return x == -1; }
inline bool is_minus_one(const Checked64& x) { return x.v == -1; }

// Rank over Q by fraction-free (Bareiss) elimination with full pivoting.
// Unit pivots are preferred and normalized to +1 (a row negation), which
// turns that step into a single multiply-subtract per cell and lets rows
// with a zero multiplier be skipped; boundary matrices almost always
// eliminate entirely on unit pivots. Exact for any integral input type:
// every division removes the previous pivot evenly.
template <class Int>
long long bareiss_rank(std::vector<Int> a, std::size_t rows, std::size_t cols) {
    if (rows == 0 || cols == 0) return 0;
    const auto at = [&](std::size_t i, std::size_t j) -> Int& {
        return a[i * cols + j];
    };
    Int prev = Int(1);
    std::size_t k = 0;
    for (; k < rows && k < cols; ++k) {
        // pivot scan: first unit entry if any, else least magnitude
        std::size_t pi = rows, pj = cols;
        bool unit = false;
        for (std::size_t i = k; i < rows && !unit; ++i)
            for (std::size_t j = k; j < cols; ++j) {
                const Int& v = at(i, j);
                if (v == 0) continue;
                if (is_one(v) || is_minus_one(v)) {
                    pi = i;
                    pj = j;
                    unit = true;
                    break;
                }
                if (pi == rows || abs_of(v) < abs_of(at(pi, pj))) {
                    pi = i;
                    pj = j;
                }
            }
        if (pi == rows) break;  // remaining block is zero
        if (pi != k)
            for (std::size_t j = k; j < cols; ++j) std::swap(at(k, j), at(pi, j));
        if (pj != k)
            for (std::size_t i = k; i < rows; ++i) std::swap(at(i, k), at(i, pj));
        if (unit && is_minus_one(at(k, k)))
            for (std::size_t j = k; j < cols; ++j) at(k, j) = Int(0) - at(k, j);

        const bool trivial = unit && is_one(prev);
        for (std::size_t i = k + 1; i < rows; ++i) {
            const Int mult = at(i, k);
            if (trivial && mult == 0) continue;
            for (std::size_t j = k + 1; j < cols; ++j) {
                if (trivial)
                    at(i, j) = at(i, j) - mult * at(k, j);
                else
                    at(i, j) = (at(k, k) * at(i, j) - mult * at(k, j)) / prev;
            }
            at(i, k) = Int(0);
        }
        prev = at(k, k);
    }
    return static_cast<long long>(k);
}

}  // namespace detail

// Exact rank of a small integer matrix over the rationals. Runs on checked
// 64-bit words and falls back to arbitrary precision if a minor overflows.
inline long long exact_rank(const std::vector<std::vector<std::int64_t>>& m) {
    const std::size_t rows = m.size();
    const std::size_t cols = rows == 0 ? 0 : m.front().size();
    try {
        std::vector<detail::Checked64> a;
        a.reserve(rows * cols);
        for (const auto& row : m) a.insert(a.end(), row.begin(), row.end());
        return detail::bareiss_rank(std::move(a), rows, cols);
    } catch (const detail::RankOverflow&) {
        std::vector<Integer> a;
        a.reserve(rows * cols);
        for (const auto& row : m) a.insert(a.end(), row.begin(), row.end());
        return detail::bareiss_rank(std::move(a), rows, cols);
    }
}

namespace detail {

// Elementary collapses: repeatedly remove a face with exactly one proper
// coface together with that coface. Homotopy type (hence homology) is
// preserved; near-full divisor complexes shrink to small cores, and a
// contractible complex collapses to nothing.
inline std::vector<std::uint32_t> collapse_free_faces(const SimplicialComplex& c) {
    const int m = c.vertex_count();
    const std::size_t space = std::size_t{1} << m;
    std::vector<char> present(space, 0);
    for (std::uint32_t f : c.faces()) present[f] = 1;

    std::vector<std::int8_t> cofaces(space, 0);
    std::vector<std::uint32_t> queue;
    for (std::uint32_t f : c.faces()) {
        std::int8_t n = 0;
        for (int v = 0; v < m; ++v)
            if (!(f >> v & 1U) && present[f | (1U << v)]) ++n;
        cofaces[f] = n;
        if (n == 1) queue.push_back(f);
    }

    const auto drop = [&](std::uint32_t f) {
        present[f] = 0;
        for (int u = 0; u < m; ++u) {
            if (!(f >> u & 1U)) continue;
            const std::uint32_t sub = f ^ (1U << u);
            if (!present[sub]) continue;
            if (--cofaces[sub] == 1) queue.push_back(sub);
        }
    };

    while (!queue.empty()) {
        const std::uint32_t p = queue.back();
        queue.pop_back();
        if (!present[p] || cofaces[p] != 1) continue;
        std::uint32_t top = 0;
        for (int v = 0; v < m; ++v)
            if (!(p >> v & 1U) && present[p | (1U << v)]) {
                top = p | (1U << v);
                break;
            }
        drop(top);
        drop(p);
    }

    std::vector<std::uint32_t> core;
    for (std::uint32_t f = 0; f < space; ++f)
        if (present[f]) core.push_back(f);
    return core;
}

}  // namespace detail

// Ranks of reduced homology over a field of characteristic 0, dimensions
// -1 .. vertex_count-1; result[k+1] is the rank in dimension k. Free faces
// are collapsed away first; the remaining boundary ranks are computed with
// exact integer elimination, never floating point.
inline std::vector<long long> reduced_homology_ranks(const SimplicialComplex& c) {
    const int m = c.vertex_count();
    std::vector<long long> h(static_cast<std::size_t>(m) + 1, 0);
    if (c.faces().empty()) return h;
    if (c.is_cone()) return h;

    const std::vector<std::uint32_t> core = detail::collapse_free_faces(c);
    if (core.empty()) return h;

    // group the core by dimension (popcount - 1), masks already sorted
    std::vector<std::vector<std::uint32_t>> bydim(static_cast<std::size_t>(m) + 1);
    for (std::uint32_t f : core)
        bydim[static_cast<std::size_t>(std::popcount(f))].push_back(f);

    int maxdim = m;
    while (maxdim >= 0 && bydim[static_cast<std::size_t>(maxdim)].empty()) --maxdim;

    // rank of boundary_k : C_k -> C_{k-1}, with the empty face as the
    // augmentation target so reduced homology comes out uniformly
    std::vector<long long> brank(static_cast<std::size_t>(maxdim) + 2, 0);
    for (int k = 1; k <= maxdim; ++k) {
        const auto& rows = bydim[static_cast<std::size_t>(k - 1)];
        const auto& cols = bydim[static_cast<std::size_t>(k)];
        if (rows.empty() || cols.empty()) continue;
        std::vector<std::vector<std::int64_t>> mat(
            rows.size(), std::vector<std::int64_t>(cols.size(), 0));
        for (std::size_t j = 0; j < cols.size(); ++j) {
            const std::uint32_t f = cols[j];
            std::int64_t sign = 1;
            for (int v = 0; v < m; ++v) {
                if (!(f >> v & 1U)) continue;
                const std::uint32_t sub = f ^ (1U << v);
                const auto it = std::lower_bound(rows.begin(), rows.end(), sub);
                if (it == rows.end() || *it != sub)  // cores are subset-closed
                    throw InternalInconsistency("collapsed core lost a facet");
                mat[static_cast<std::size_t>(it - rows.begin())][j] = sign;
                sign = -sign;
            }
        }
        brank[static_cast<std::size_t>(k)] = exact_rank(mat);
    }

    for (int k = 0; k <= maxdim; ++k) {
        const long long faces_k =
            static_cast<long long>(bydim[static_cast<std::size_t>(k)].size());
        h[static_cast<std::size_t>(k)] = faces_k -
                                         brank[static_cast<std::size_t>(k)] -
                                         brank[static_cast<std::size_t>(k) + 1];
    }
    return h;
}

}  // namespace nsg
