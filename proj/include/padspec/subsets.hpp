#pragma once

#include <algorithm>
#include <cstddef>
#include <vector>

#include "padspec/errors.hpp"

namespace padspec {

/// Index subsets in canonical form: sorted, duplicate-free.
using IndexSubset = std::vector<std::size_t>;

inline IndexSubset normalize_subset(IndexSubset s) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    return s;
}

inline void require_subset_range(const IndexSubset& s, std::size_t n) {
    for (auto i : s)
        if (i >= n) throw InputError("subset index out of range");
}

inline bool subset_contains(const IndexSubset& s, std::size_t i) {
    return std::binary_search(s.begin(), s.end(), i);
}

inline IndexSubset subset_union(const IndexSubset& a, const IndexSubset& b) {
    IndexSubset r;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
    return r;
}

inline IndexSubset subset_intersect(const IndexSubset& a, const IndexSubset& b) {
    IndexSubset r;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
    return r;
}

inline IndexSubset subset_complement(const IndexSubset& a, std::size_t n) {
    IndexSubset r;
    for (std::size_t i = 0, k = 0; i < n; ++i) {
        if (k < a.size() && a[k] == i) {
            ++k;
        } else {
            r.push_back(i);
        }
    }
    return r;
}

inline bool subsets_disjoint(const IndexSubset& a, const IndexSubset& b) {
    return subset_intersect(a, b).empty();
}

inline bool is_subset_of(const IndexSubset& a, const IndexSubset& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

}  // namespace padspec
