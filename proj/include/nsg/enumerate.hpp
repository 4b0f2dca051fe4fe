#pragma once

#include <functional>
#include <vector>

#include "nsg/errors.hpp"

namespace nsg {

// One node of the genus tree: a numerical semigroup given by a membership
// table over [0, limit) together with its Frobenius number and genus. The
// minimal generators are recomputed per node; bounds stay tiny at desk scale
// (every minimal generator is below conductor + multiplicity).
struct SemigroupNode {
    std::vector<char> member;  // member[x] = 1 iff x in S, x < limit
    long long frobenius = -1;
    int genus = 0;

    std::vector<long long> min_generators() const {
        std::vector<long long> out;
        const long long limit = static_cast<long long>(member.size());
        for (long long x = 1; x < limit; ++x) {
            if (!member[static_cast<std::size_t>(x)]) continue;
            bool decomposable = false;
            for (long long y = 1; y + y <= x; ++y)
                if (member[static_cast<std::size_t>(y)] &&
                    member[static_cast<std::size_t>(x - y)]) {
                    decomposable = true;
                    break;
                }
            if (!decomposable) out.push_back(x);
        }
        return out;
    }
};

namespace detail {

inline long long node_limit(int max_genus) { return 3LL * max_genus + 4; }

inline void enumerate_children(const SemigroupNode& node, int max_genus,
                               const std::function<void(const SemigroupNode&)>& visit) {
    if (node.genus >= max_genus) return;
    for (long long g : node.min_generators()) {
        if (g <= node.frobenius) continue;
        SemigroupNode child = node;
        child.member[static_cast<std::size_t>(g)] = 0;
        child.frobenius = g;
        child.genus = node.genus + 1;
        visit(child);
        enumerate_children(child, max_genus, visit);
    }
}

}  // namespace detail

inline SemigroupNode enumeration_root(int max_genus) {
    SemigroupNode root;
    root.member.assign(static_cast<std::size_t>(detail::node_limit(max_genus)), 1);
    root.frobenius = -1;
    root.genus = 0;
    return root;
}

// Depth-first preorder over the generating tree: each numerical semigroup of
// genus <= max_genus is produced exactly once (children remove one minimal
// generator above the Frobenius number, in ascending order).
inline void enumerate_semigroups(int max_genus,
                                 const std::function<void(const SemigroupNode&)>& visit) {
    if (max_genus < 0) throw PreconditionFailed("negative genus bound");
    SemigroupNode root = enumeration_root(max_genus);
    visit(root);
    detail::enumerate_children(root, max_genus, visit);
}

// The tree split used by parallel search: a flat item list in serial
// preorder position, where an item is either a single shallow node (genus
// below the split depth) or the root of an independent subtree. Emitting
// shallow nodes directly and subtree results in place reproduces the serial
// output byte for byte regardless of worker scheduling.
struct EnumerationPlan {
    struct Item {
        SemigroupNode node;
        bool is_subtree_root = false;
    };
    std::vector<Item> items;
};

inline EnumerationPlan split_enumeration(int depth, int max_genus) {
    EnumerationPlan out;
    const int cutoff = depth < max_genus ? depth : max_genus;
    std::function<void(const SemigroupNode&)> rec = [&](const SemigroupNode& node) {
        if (node.genus == cutoff && cutoff < max_genus) {
            out.items.push_back({node, true});
            return;
        }
        out.items.push_back({node, false});
        for (long long g : node.min_generators()) {
            if (g <= node.frobenius) continue;
            SemigroupNode child = node;
            child.member[static_cast<std::size_t>(g)] = 0;
            child.frobenius = g;
            child.genus = node.genus + 1;
            rec(child);
        }
    };
    if (max_genus >= 0) rec(enumeration_root(max_genus));
    return out;
}

// Preorder visit of the subtree rooted at `root` (the root itself included).
inline void enumerate_subtree(const SemigroupNode& root, int max_genus,
                              const std::function<void(const SemigroupNode&)>& visit) {
    visit(root);
    detail::enumerate_children(root, max_genus, visit);
}

}  // namespace nsg
