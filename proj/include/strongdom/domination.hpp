#pragma once

#include <strongdom/graph.hpp>

#include <vector>

namespace strongdom
{
    /// N_st[x] = {x} ∪ {y ∈ N(x) : deg(y) >= deg(x)}: exactly the vertices
    /// able to strong-dominate x, including x itself.
    struct StrongNeighborhood
    {
        Vertex vertex;
        VertexSet members;
    };

    auto strong_closed_neighborhood(const Graph & g, Vertex x) -> StrongNeighborhood;

    /// {x} ∪ {y ∈ N(x) : deg(y) <= deg(x)}.
    auto weak_closed_neighborhood(const Graph & g, Vertex x) -> VertexSet;

    enum class DominationKind
    {
        classic,
        strong,
        weak
    };

    /// For each vertex x, the set of vertices that can dominate x under the
    /// given kind (N[x], N_st[x] or N_w[x]). A set D dominates under that kind
    /// iff it meets every entry.
    auto covering_sets(const Graph & g, DominationKind kind) -> std::vector<VertexSet>;

    auto is_dominating_set(const Graph & g, const VertexSet & d) -> bool;

    /// Checked straight from the definition: every x outside d has a
    /// neighbor y in d with deg(y) >= deg(x).
    auto is_strong_dominating_set(const Graph & g, const VertexSet & d) -> bool;

    /// Same predicate, evaluated as "d meets every N_st[x]".
    auto meets_every_strong_neighborhood(const Graph & g, const VertexSet & d) -> bool;

    auto is_weak_dominating_set(const Graph & g, const VertexSet & d) -> bool;

    struct MinimumSet
    {
        int size;
        VertexSet witness;
    };

    /// Exact minimum dominating set of the given kind.
    ///
    /// Cardinalities are tried in ascending order; for each one a vertex-by-
    /// vertex include/exclude search runs with inclusion tried first, and a
    /// branch is cut as soon as some covering set misses both the chosen
    /// vertices and every vertex not yet decided. The first hit is therefore
    /// the minimum set whose ascending member list is lexicographically
    /// least. Throws std::invalid_argument for order 0.
    auto minimum_dominating_set(const Graph & g, DominationKind kind) -> MinimumSet;

    auto domination_number(const Graph & g) -> int;
    auto strong_domination_number(const Graph & g) -> MinimumSet;
    auto weak_domination_number(const Graph & g) -> int;
}
