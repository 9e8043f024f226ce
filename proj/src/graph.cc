#include <strongdom/graph.hpp>

#include <algorithm>
#include <numeric>

using std::uint64_t;
using std::vector;

namespace strongdom
{
    namespace
    {
        auto check_order(int order) -> void
        {
            if (order < 0 || order > max_order)
                throw std::invalid_argument("graph order " + std::to_string(order) + " outside 0.." + std::to_string(max_order));
        }
    }

    VertexSet::VertexSet(int order) :
        _order(order)
    {
        check_order(order);
    }

    VertexSet::VertexSet(int order, uint64_t bits) :
        _bits(bits),
        _order(order)
    {
        check_order(order);
        if (0 != (bits & ~low_mask(order)))
            throw std::invalid_argument("vertex set has members outside 0.." + std::to_string(order - 1));
    }

    VertexSet::VertexSet(int order, std::initializer_list<Vertex> members) :
        VertexSet(order)
    {
        for (auto v : members)
            *this = with(v);
    }

    auto VertexSet::full(int order) -> VertexSet
    {
        return VertexSet(order, low_mask(order));
    }

    auto VertexSet::with(Vertex v) const -> VertexSet
    {
        if (v < 0 || v >= _order)
            throw std::out_of_range("vertex " + std::to_string(v) + " outside set of order " + std::to_string(_order));
        VertexSet result = *this;
        result._bits |= uint64_t{1} << v;
        return result;
    }

    auto VertexSet::without(Vertex v) const -> VertexSet
    {
        if (v < 0 || v >= _order)
            throw std::out_of_range("vertex " + std::to_string(v) + " outside set of order " + std::to_string(_order));
        VertexSet result = *this;
        result._bits &= ~(uint64_t{1} << v);
        return result;
    }

    auto VertexSet::complement() const -> VertexSet
    {
        return VertexSet(_order, ~_bits & low_mask(_order));
    }

    auto VertexSet::members() const -> vector<Vertex>
    {
        vector<Vertex> result;
        result.reserve(size());
        for (uint64_t b = _bits ; b ; b &= b - 1)
            result.push_back(std::countr_zero(b));
        return result;
    }

    auto VertexSet::operator| (const VertexSet & other) const -> VertexSet
    {
        return VertexSet(std::max(_order, other._order), _bits | other._bits);
    }

    auto VertexSet::operator& (const VertexSet & other) const -> VertexSet
    {
        return VertexSet(std::max(_order, other._order), _bits & other._bits);
    }

    auto VertexSet::to_string() const -> std::string
    {
        std::string result = "{";
        bool first = true;
        for (auto v : members()) {
            if (! first)
                result += ',';
            result += std::to_string(v);
            first = false;
        }
        return result + "}";
    }

    Graph::Graph(int order, vector<uint64_t> rows) :
        _order(order),
        _rows(std::move(rows))
    {
    }

    auto Graph::from_edge_list(int order, const vector<Edge> & edges) -> Graph
    {
        check_order(order);
        vector<uint64_t> rows(order, 0);
        for (auto & [u, v] : edges) {
            if (u < 0 || v < 0 || u >= order || v >= order)
                throw std::invalid_argument("edge (" + std::to_string(u) + "," + std::to_string(v)
                        + ") has an endpoint outside 0.." + std::to_string(order - 1));
            if (u == v)
                throw std::invalid_argument("loop edge at vertex " + std::to_string(u));
            rows[u] |= uint64_t{1} << v;
            rows[v] |= uint64_t{1} << u;
        }
        return Graph(order, std::move(rows));
    }

    auto Graph::from_adjacency_rows(int order, vector<uint64_t> rows) -> Graph
    {
        check_order(order);
        if (rows.size() != std::size_t(order))
            throw std::invalid_argument("expected " + std::to_string(order) + " adjacency rows");
        for (int u = 0 ; u < order ; ++u) {
            if (0 != (rows[u] & ~low_mask(order)))
                throw std::invalid_argument("adjacency row " + std::to_string(u) + " references a vertex beyond the order");
            if ((rows[u] >> u) & 1u)
                throw std::invalid_argument("loop edge at vertex " + std::to_string(u));
            for (uint64_t b = rows[u] ; b ; b &= b - 1)
                if (! ((rows[std::countr_zero(b)] >> u) & 1u))
                    throw std::invalid_argument("adjacency is not symmetric at vertex " + std::to_string(u));
        }
        return Graph(order, std::move(rows));
    }

    auto Graph::check_vertex(Vertex v) const -> void
    {
        if (v < 0 || v >= _order)
            throw std::out_of_range("vertex " + std::to_string(v) + " outside graph of order " + std::to_string(_order));
    }

    auto Graph::edge_count() const -> int
    {
        int twice = 0;
        for (auto r : _rows)
            twice += std::popcount(r);
        return twice / 2;
    }

    auto Graph::adjacent(Vertex u, Vertex v) const -> bool
    {
        check_vertex(u);
        check_vertex(v);
        return (_rows[u] >> v) & 1u;
    }

    auto Graph::neighbors(Vertex v) const -> VertexSet
    {
        check_vertex(v);
        return VertexSet(_order, _rows[v]);
    }

    auto Graph::closed_neighborhood(Vertex v) const -> VertexSet
    {
        return neighbors(v).with(v);
    }

    auto Graph::degree(Vertex v) const -> int
    {
        check_vertex(v);
        return std::popcount(_rows[v]);
    }

    auto Graph::max_degree() const -> int
    {
        if (0 == _order)
            throw std::domain_error("maximum degree of the empty graph");
        int result = 0;
        for (auto r : _rows)
            result = std::max(result, std::popcount(r));
        return result;
    }

    auto Graph::min_degree() const -> int
    {
        if (0 == _order)
            throw std::domain_error("minimum degree of the empty graph");
        int result = _order;
        for (auto r : _rows)
            result = std::min(result, std::popcount(r));
        return result;
    }

    auto Graph::max_degree_count() const -> int
    {
        auto top = max_degree();
        return int(std::count_if(_rows.begin(), _rows.end(), [&] (uint64_t r) { return std::popcount(r) == top; }));
    }

    auto Graph::degree_sequence() const -> vector<int>
    {
        vector<int> result;
        result.reserve(_order);
        for (auto r : _rows)
            result.push_back(std::popcount(r));
        return result;
    }

    auto Graph::is_regular() const -> bool
    {
        return _order == 0 || max_degree() == min_degree();
    }

    auto Graph::components() const -> vector<VertexSet>
    {
        vector<VertexSet> result;
        uint64_t unseen = low_mask(_order);
        while (unseen) {
            uint64_t component = unseen & -unseen, frontier = component;
            while (frontier) {
                uint64_t next = 0;
                for (uint64_t b = frontier ; b ; b &= b - 1)
                    next |= _rows[std::countr_zero(b)];
                frontier = next & ~component;
                component |= next;
            }
            result.emplace_back(_order, component);
            unseen &= ~component;
        }
        return result;
    }

    auto Graph::is_connected() const -> bool
    {
        return components().size() <= 1;
    }

    auto Graph::edges() const -> vector<Edge>
    {
        vector<Edge> result;
        for (int u = 0 ; u < _order ; ++u)
            for (uint64_t b = _rows[u] & ~low_mask(u + 1) ; b ; b &= b - 1)
                result.emplace_back(u, std::countr_zero(b));
        return result;
    }

    auto Graph::permuted(const vector<Vertex> & permutation) const -> Graph
    {
        if (permutation.size() != std::size_t(_order))
            throw std::invalid_argument("permutation length does not match graph order");
        uint64_t seen = 0;
        for (auto p : permutation) {
            if (p < 0 || p >= _order || ((seen >> p) & 1u))
                throw std::invalid_argument("not a permutation of the vertex set");
            seen |= uint64_t{1} << p;
        }

        vector<uint64_t> rows(_order, 0);
        for (int u = 0 ; u < _order ; ++u)
            for (uint64_t b = _rows[u] ; b ; b &= b - 1)
                rows[permutation[u]] |= uint64_t{1} << permutation[std::countr_zero(b)];
        return Graph(_order, std::move(rows));
    }

    auto Graph::induced(const VertexSet & keep) const -> Graph
    {
        auto kept = keep.members();
        vector<int> position(_order, -1);
        for (std::size_t i = 0 ; i < kept.size() ; ++i)
            position[kept[i]] = int(i);

        vector<uint64_t> rows(kept.size(), 0);
        for (std::size_t i = 0 ; i < kept.size() ; ++i)
            for (uint64_t b = _rows[kept[i]] & keep.bits() ; b ; b &= b - 1)
                rows[i] |= uint64_t{1} << position[std::countr_zero(b)];
        return Graph(int(kept.size()), std::move(rows));
    }
}
