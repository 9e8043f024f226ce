#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace strongdom
{
    using Vertex = int;

    /// Largest order a Graph can hold; one adjacency row is a single 64-bit word.
    inline constexpr int max_order = 64;

    /// A subset of the vertices {0, ..., order-1} of one graph, stored as a bit mask.
    class VertexSet
    {
        private:
            std::uint64_t _bits = 0;
            int _order = 0;

        public:
            VertexSet() = default;

            explicit VertexSet(int order);

            /// Throws std::invalid_argument if a bit at or above `order` is set.
            VertexSet(int order, std::uint64_t bits);

            VertexSet(int order, std::initializer_list<Vertex> members);

            static auto full(int order) -> VertexSet;

            auto order() const -> int { return _order; }
            auto bits() const -> std::uint64_t { return _bits; }
            auto size() const -> int { return std::popcount(_bits); }
            auto empty() const -> bool { return 0 == _bits; }

            auto contains(Vertex v) const -> bool
            {
                return v >= 0 && v < _order && (_bits >> v) & 1u;
            }

            auto with(Vertex v) const -> VertexSet;
            auto without(Vertex v) const -> VertexSet;

            auto intersects(const VertexSet & other) const -> bool { return 0 != (_bits & other._bits); }

            auto complement() const -> VertexSet;

            /// Members in ascending order.
            auto members() const -> std::vector<Vertex>;

            auto operator| (const VertexSet & other) const -> VertexSet;
            auto operator& (const VertexSet & other) const -> VertexSet;

            auto operator== (const VertexSet &) const -> bool = default;

            /// "{0,3,5}"
            auto to_string() const -> std::string;
    };

    /// Mask with the low `order` bits set.
    inline auto low_mask(int order) -> std::uint64_t
    {
        return order >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << order) - 1;
    }

    using Edge = std::pair<Vertex, Vertex>;

    /// An immutable simple undirected graph over vertices 0..order-1.
    ///
    /// Adjacency is held as one bit row per vertex. Every constructor enforces
    /// symmetry and irreflexivity, so a Graph value always satisfies both.
    class Graph
    {
        private:
            int _order = 0;
            std::vector<std::uint64_t> _rows;

            Graph(int order, std::vector<std::uint64_t> rows);

        public:
            /// The graph with no vertices.
            Graph() = default;

            /// Builds a graph from an edge list. Duplicate edges (in either
            /// orientation) collapse; loops and out-of-range endpoints throw
            /// std::invalid_argument.
            static auto from_edge_list(int order, const std::vector<Edge> & edges) -> Graph;

            /// Builds a graph from raw adjacency rows. The rows must already be
            /// symmetric and loop free; throws std::invalid_argument otherwise.
            static auto from_adjacency_rows(int order, std::vector<std::uint64_t> rows) -> Graph;

            auto order() const -> int { return _order; }
            auto edge_count() const -> int;

            auto adjacent(Vertex u, Vertex v) const -> bool;
            auto neighbors(Vertex v) const -> VertexSet;
            auto closed_neighborhood(Vertex v) const -> VertexSet;
            auto row(Vertex v) const -> std::uint64_t { return _rows[v]; }

            auto degree(Vertex v) const -> int;

            /// Both throw std::domain_error on the empty graph.
            auto max_degree() const -> int;
            auto min_degree() const -> int;

            /// Number of vertices attaining the maximum degree.
            auto max_degree_count() const -> int;

            auto degree_sequence() const -> std::vector<int>;

            auto is_regular() const -> bool;
            auto is_connected() const -> bool;

            auto edges() const -> std::vector<Edge>;

            /// The graph with vertex v relabeled to permutation[v].
            auto permuted(const std::vector<Vertex> & permutation) const -> Graph;

            /// Subgraph induced on `keep`, relabeled in ascending order.
            auto induced(const VertexSet & keep) const -> Graph;

            /// Vertex sets of the connected components, ordered by smallest member.
            auto components() const -> std::vector<VertexSet>;

            auto operator== (const Graph &) const -> bool = default;

        private:
            auto check_vertex(Vertex v) const -> void;
    };
}
