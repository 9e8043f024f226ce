#pragma once

#include <strongdom/graph.hpp>

#include <cstdint>
#include <vector>

namespace strongdom
{
    inline constexpr int enumeration_max_order = 12;

    struct EnumerationStats
    {
        /// Complete labeled matrices that survived the adjacent-swap pruning.
        std::uint64_t candidates = 0;
        /// Distinct isomorphism classes kept.
        std::uint64_t classes = 0;
    };

    /// One representative per isomorphism class of k-regular graphs on n
    /// vertices, disconnected ones included unless connected_only.
    ///
    /// Adjacency rows are filled top to bottom. A partial matrix is dropped
    /// when swapping two consecutive vertices would make its completed rows
    /// lexicographically larger, which never removes the row-wise
    /// lexicographically largest matrix of a class. Survivors are
    /// deduplicated by canonical form; each representative is returned in its
    /// canonical labeling, in ascending canonical-form order.
    ///
    /// Throws std::invalid_argument unless 0 <= k < n <= 12 and n*k is even.
    auto enumerate_regular(int n, int k, bool connected_only = false, EnumerationStats * stats = nullptr) -> std::vector<Graph>;
}
