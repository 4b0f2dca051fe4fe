#pragma once

#include <initializer_list>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "nsg/errors.hpp"
#include "nsg/integer.hpp"

namespace nsg {

// Finite multiset of integers: element -> multiplicity >= 1. Zero counts are
// never stored, so the empty multiset is a single canonical value. Immutable
// in spirit: every operation returns a fresh value, iteration is ascending
// by element.
template <class Int>
class BasicMultiset {
public:
    using map_type = std::map<Int, Int>;

    BasicMultiset() = default;

    template <class Range>
    static BasicMultiset from_elements(const Range& xs) {
        BasicMultiset out;
        for (const auto& x : xs) out.add(Int(x), 1);
        return out;
    }

    static BasicMultiset from_elements(std::initializer_list<Int> xs) {
        BasicMultiset out;
        for (const auto& x : xs) out.add(x, 1);
        return out;
    }

    static BasicMultiset from_pairs(std::initializer_list<std::pair<Int, Int>> ps) {
        BasicMultiset out;
        for (const auto& [v, k] : ps) out.add(v, k);
        return out;
    }

    void add(const Int& value, const Int& count = 1) {
        if (count == 0) return;
        if (count < 0) throw ContainmentViolation("negative multiplicity");
        counts_[value] += count;
    }

    // sigma(w); 0 means absent
    Int multiplicity(const Int& value) const {
        auto it = counts_.find(value);
        return it == counts_.end() ? Int(0) : it->second;
    }

    Int cardinality() const {
        Int n = 0;
        for (const auto& [v, k] : counts_) n += k;
        return n;
    }

    bool empty() const { return counts_.empty(); }
    std::size_t support_size() const { return counts_.size(); }
    const map_type& counts() const { return counts_; }

    bool operator==(const BasicMultiset& o) const { return counts_ == o.counts_; }
    bool operator!=(const BasicMultiset& o) const { return !(*this == o); }

    // join: multiplicities add
    BasicMultiset join(const BasicMultiset& o) const {
        BasicMultiset out = *this;
        for (const auto& [v, k] : o.counts_) out.counts_[v] += k;
        return out;
    }

    // meet: multiplicities take the minimum
    BasicMultiset meet(const BasicMultiset& o) const {
        BasicMultiset out;
        for (const auto& [v, k] : counts_) {
            auto it = o.counts_.find(v);
            if (it == o.counts_.end()) continue;
            const Int& m = k < it->second ? k : it->second;
            if (m > 0) out.counts_[v] = m;
        }
        return out;
    }

    // difference; requires o contained in *this
    BasicMultiset difference(const BasicMultiset& o) const {
        BasicMultiset out = *this;
        for (const auto& [v, k] : o.counts_) {
            auto it = out.counts_.find(v);
            if (it == out.counts_.end() || it->second < k) {
                std::ostringstream msg;
                msg << "element " << v << " has multiplicity " << multiplicity(v)
                    << " < " << k;
                throw ContainmentViolation(msg.str());
            }
            it->second -= k;
            if (it->second == 0) out.counts_.erase(it);
        }
        return out;
    }

    // join sumset: all pairwise sums, multiplicities multiply
    BasicMultiset sumset_join(const BasicMultiset& o) const {
        BasicMultiset out;
        for (const auto& [v, k] : counts_)
            for (const auto& [w, l] : o.counts_) out.counts_[v + w] += k * l;
        return out;
    }

    // every element shifted by alpha; equals sumset_join({alpha:1})
    BasicMultiset shift(const Int& alpha) const {
        BasicMultiset out;
        for (const auto& [v, k] : counts_) out.counts_[v + alpha] = k;
        return out;
    }

    bool contained_in(const BasicMultiset& o) const {
        for (const auto& [v, k] : counts_) {
            auto it = o.counts_.find(v);
            if (it == o.counts_.end() || it->second < k) return false;
        }
        return true;
    }

    // ascending elements, each repeated by its multiplicity (desk scale only)
    std::vector<Int> expanded() const {
        std::vector<Int> out;
        for (const auto& [v, k] : counts_)
            for (Int i = 0; i < k; ++i) out.push_back(v);
        return out;
    }

    // underlying set, ascending
    std::vector<Int> support() const {
        std::vector<Int> out;
        out.reserve(counts_.size());
        for (const auto& [v, k] : counts_) out.push_back(v);
        return out;
    }

    std::string to_string() const {
        std::ostringstream os;
        os << '{';
        bool first = true;
        for (const auto& [v, k] : counts_) {
            if (!first) os << ", ";
            first = false;
            os << v;
            if (k != 1) os << ':' << k;
        }
        os << '}';
        return os.str();
    }

private:
    map_type counts_;
};

using IntMultiset = BasicMultiset<Integer>;

}  // namespace nsg
