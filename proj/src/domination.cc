#include <strongdom/domination.hpp>

#include <optional>
#include <stdexcept>

using std::uint64_t;
using std::vector;

namespace strongdom
{
    namespace
    {
        auto check_same_order(const Graph & g, const VertexSet & d) -> void
        {
            if (d.order() != g.order())
                throw std::invalid_argument("vertex set of order " + std::to_string(d.order())
                        + " used with graph of order " + std::to_string(g.order()));
        }
    }

    auto strong_closed_neighborhood(const Graph & g, Vertex x) -> StrongNeighborhood
    {
        auto own = g.degree(x);
        uint64_t members = uint64_t{1} << x;
        for (uint64_t b = g.row(x) ; b ; b &= b - 1)
            if (auto y = std::countr_zero(b) ; g.degree(y) >= own)
                members |= uint64_t{1} << y;
        return { x, VertexSet(g.order(), members) };
    }

    auto weak_closed_neighborhood(const Graph & g, Vertex x) -> VertexSet
    {
        auto own = g.degree(x);
        uint64_t members = uint64_t{1} << x;
        for (uint64_t b = g.row(x) ; b ; b &= b - 1)
            if (auto y = std::countr_zero(b) ; g.degree(y) <= own)
                members |= uint64_t{1} << y;
        return VertexSet(g.order(), members);
    }

    auto covering_sets(const Graph & g, DominationKind kind) -> vector<VertexSet>
    {
        vector<VertexSet> result;
        result.reserve(g.order());
        for (Vertex x = 0 ; x < g.order() ; ++x)
            switch (kind) {
                case DominationKind::classic: result.push_back(g.closed_neighborhood(x)); break;
                case DominationKind::strong:  result.push_back(strong_closed_neighborhood(g, x).members); break;
                case DominationKind::weak:    result.push_back(weak_closed_neighborhood(g, x)); break;
            }
        return result;
    }

    auto is_dominating_set(const Graph & g, const VertexSet & d) -> bool
    {
        check_same_order(g, d);
        for (Vertex x = 0 ; x < g.order() ; ++x)
            if (! d.contains(x) && 0 == (g.row(x) & d.bits()))
                return false;
        return true;
    }

    auto is_strong_dominating_set(const Graph & g, const VertexSet & d) -> bool
    {
        check_same_order(g, d);
        for (Vertex x = 0 ; x < g.order() ; ++x) {
            if (d.contains(x))
                continue;
            bool dominated = false;
            for (Vertex y = 0 ; y < g.order() && ! dominated ; ++y)
                dominated = d.contains(y) && g.adjacent(x, y) && g.degree(x) <= g.degree(y);
            if (! dominated)
                return false;
        }
        return true;
    }

    auto meets_every_strong_neighborhood(const Graph & g, const VertexSet & d) -> bool
    {
        check_same_order(g, d);
        for (Vertex x = 0 ; x < g.order() ; ++x)
            if (! strong_closed_neighborhood(g, x).members.intersects(d))
                return false;
        return true;
    }

    auto is_weak_dominating_set(const Graph & g, const VertexSet & d) -> bool
    {
        check_same_order(g, d);
        for (Vertex x = 0 ; x < g.order() ; ++x) {
            if (d.contains(x))
                continue;
            bool dominated = false;
            for (Vertex y = 0 ; y < g.order() && ! dominated ; ++y)
                dominated = d.contains(y) && g.adjacent(x, y) && g.degree(x) >= g.degree(y);
            if (! dominated)
                return false;
        }
        return true;
    }

    namespace
    {
        struct FixedSizeSearch
        {
            const vector<uint64_t> & sets;
            int n;
            int target;

            // undecided(i) = vertices i..n-1
            auto undecided(int i) const -> uint64_t
            {
                return low_mask(n) & ~low_mask(i);
            }

            auto search(int i, uint64_t chosen, int count) const -> std::optional<uint64_t>
            {
                uint64_t reachable = chosen | (count < target ? undecided(i) : 0);
                for (auto s : sets)
                    if (0 == (s & reachable))
                        return std::nullopt;

                if (count == target)
                    return chosen;
                if (n - i < target - count)
                    return std::nullopt;

                if (auto r = search(i + 1, chosen | (uint64_t{1} << i), count + 1))
                    return r;
                return search(i + 1, chosen, count);
            }
        };
    }

    auto minimum_dominating_set(const Graph & g, DominationKind kind) -> MinimumSet
    {
        if (0 == g.order())
            throw std::invalid_argument("domination number of the empty graph");

        vector<uint64_t> sets;
        for (auto & s : covering_sets(g, kind))
            sets.push_back(s.bits());

        for (int k = 1 ; k <= g.order() ; ++k)
            if (auto found = FixedSizeSearch{ sets, g.order(), k }.search(0, 0, 0))
                return { k, VertexSet(g.order(), *found) };

        throw std::logic_error("the full vertex set always dominates");
    }

    auto domination_number(const Graph & g) -> int
    {
        return minimum_dominating_set(g, DominationKind::classic).size;
    }

    auto strong_domination_number(const Graph & g) -> MinimumSet
    {
        return minimum_dominating_set(g, DominationKind::strong);
    }

    auto weak_domination_number(const Graph & g) -> int
    {
        return minimum_dominating_set(g, DominationKind::weak).size;
    }
}
