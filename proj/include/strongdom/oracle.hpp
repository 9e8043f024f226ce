#pragma once

#include <strongdom/graph.hpp>

namespace strongdom
{
    /// Largest order the exhaustive oracles accept (Bell(12) ~ 4.2M partitions).
    inline constexpr int oracle_max_order = 12;

    /// d_st by enumerating every set partition as a restricted-growth string
    /// and testing each class with is_strong_dominating_set. Shares no search
    /// code with strong_domatic_number. Throws std::invalid_argument for order
    /// 0 or order above oracle_max_order.
    auto oracle_strong_domatic(const Graph & g) -> int;

    /// gamma_st by testing every subset, smallest cardinality first.
    auto oracle_gamma_st(const Graph & g) -> int;
}
