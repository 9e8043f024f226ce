#pragma once

#include <strongdom/graph.hpp>

#include <cstdint>
#include <random>
#include <vector>

namespace strongdom::support
{
    /// Least packed upper triangle over all n! relabelings. Orders up to 8.
    auto brute_force_form(const Graph & g) -> std::vector<std::uint8_t>;

    /// Every strong dominating set of minimum size, by subset enumeration.
    auto all_minimum_strong_dominating_sets(const Graph & g) -> std::vector<VertexSet>;

    /// Lexicographic order of the ascending member lists.
    auto members_less(const VertexSet & a, const VertexSet & b) -> bool;

    /// Every set partition of 0..n-1, in restricted-growth-string order.
    auto all_partitions(int n) -> std::vector<std::vector<VertexSet>>;

    /// Length of a shortest cycle, 0 for a forest.
    auto girth(const Graph & g) -> int;

    /// Fisher-Yates from raw engine output; result[v] is the new label of v.
    auto random_permutation(int n, std::mt19937_64 & rng) -> std::vector<Vertex>;

    /// A fixed assortment of small graphs: family members, coronas, unions
    /// and seeded random graphs, all of order at most max_order.
    auto sample_graphs(int max_order, std::uint64_t seed = 7, int random_count = 60) -> std::vector<Graph>;
}
