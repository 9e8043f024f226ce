#pragma once

#include <strongdom/graph.hpp>

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace strongdom
{
    inline constexpr int canonical_max_order = 16;

    /// Upper-triangle adjacency bits of the canonically relabeled graph, in
    /// graph6 column order (0,1), (0,2), (1,2), (0,3), ..., packed eight to a
    /// byte with the first bit in the most significant position.
    ///
    /// Ordering compares order first, then bytes; for equal order that is the
    /// lexicographic order of the bit strings.
    struct CanonicalForm
    {
        int order = 0;
        std::vector<std::uint8_t> bytes;

        auto operator<=> (const CanonicalForm &) const = default;
        auto operator== (const CanonicalForm &) const -> bool = default;

        auto to_hex() const -> std::string;
    };

    struct CanonicalLabeling
    {
        /// labeling[v] is the canonical index of vertex v.
        std::vector<Vertex> labeling;
        CanonicalForm form;
    };

    /// Refine to an equitable ordered coloring, then individualize vertices
    /// of the first smallest non-singleton cell and recurse, exploring every
    /// branch except those provably equivalent (twin vertices, or images under
    /// an automorphism already found that fixes the individualized prefix).
    /// The leaf with the lexicographically least bit string wins.
    ///
    /// Throws std::invalid_argument above canonical_max_order.
    auto canonical_labeling(const Graph & g) -> CanonicalLabeling;

    auto canonical_form(const Graph & g) -> CanonicalForm;

    /// g relabeled by its canonical labeling.
    auto canonical_graph(const Graph & g) -> Graph;

    /// Degree-sequence reject, then canonical form equality.
    auto are_isomorphic(const Graph & g, const Graph & h) -> bool;

    /// Packs the upper triangle of g (as labeled) the same way CanonicalForm does.
    auto adjacency_bits(const Graph & g) -> std::vector<std::uint8_t>;
}
