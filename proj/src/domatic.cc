#include <strongdom/domatic.hpp>

#include <algorithm>
#include <numeric>

using std::optional;
using std::uint64_t;
using std::vector;

namespace strongdom
{
    BudgetExceeded::BudgetExceeded(uint64_t nodes) :
        std::runtime_error("search node budget exceeded after " + std::to_string(nodes) + " nodes"),
        _nodes(nodes)
    {
    }

    auto validate_partition(const Graph & g, const Partition & p) -> void
    {
        if (p.order != g.order())
            throw InvalidPartition("partition of order " + std::to_string(p.order) + " used with graph of order " + std::to_string(g.order()));

        uint64_t seen = 0;
        for (std::size_t i = 0 ; i < p.classes.size() ; ++i) {
            auto & c = p.classes[i];
            if (c.order() != g.order())
                throw InvalidPartition("class " + std::to_string(i) + " has the wrong order");
            if (c.empty())
                throw InvalidPartition("class " + std::to_string(i) + " is empty");
            if (c.bits() & seen)
                throw InvalidPartition("class " + std::to_string(i) + " overlaps an earlier class");
            seen |= c.bits();
        }
        if (seen != low_mask(g.order()))
            throw InvalidPartition("classes do not cover every vertex");
    }

    auto is_strong_domatic_partition(const Graph & g, const Partition & p) -> bool
    {
        validate_partition(g, p);
        return std::all_of(p.classes.begin(), p.classes.end(),
                [&] (const VertexSet & c) { return is_strong_dominating_set(g, c); });
    }

    auto every_strong_neighborhood_meets_every_class(const Graph & g, const Partition & p) -> bool
    {
        validate_partition(g, p);
        for (auto & s : covering_sets(g, DominationKind::strong))
            for (auto & c : p.classes)
                if (! s.intersects(c))
                    return false;
        return true;
    }

    auto is_domatic_partition(const Graph & g, const Partition & p) -> bool
    {
        validate_partition(g, p);
        return std::all_of(p.classes.begin(), p.classes.end(),
                [&] (const VertexSet & c) { return is_dominating_set(g, c); });
    }

    auto DstBounds::upper() const -> int
    {
        auto result = std::min({ max_degree_count, min_degree_plus_one, min_strong_neighborhood });
        if (order_over_gamma_st)
            result = std::min(result, *order_over_gamma_st);
        return result;
    }

    auto dst_bounds(const Graph & g, optional<int> gamma_st) -> DstBounds
    {
        if (0 == g.order())
            throw std::invalid_argument("strong domatic bounds of the empty graph");

        DstBounds result;
        result.max_degree_count = g.max_degree_count();
        result.min_degree_plus_one = g.min_degree() + 1;
        result.min_strong_neighborhood = dst_upper_bound(g);
        if (gamma_st)
            result.order_over_gamma_st = g.order() / *gamma_st;
        return result;
    }

    auto dst_upper_bound(const Graph & g) -> int
    {
        if (0 == g.order())
            throw std::invalid_argument("strong domatic bound of the empty graph");
        int result = g.order();
        for (auto & s : covering_sets(g, DominationKind::strong))
            result = std::min(result, s.size());
        return result;
    }

    namespace
    {
        /// Backtracking color assignment under the rainbow condition.
        class RainbowSearch
        {
            private:
                int _n, _k;
                vector<uint64_t> _sets;
                vector<vector<int>> _sets_of;
                vector<int> _order;

                vector<int> _color;
                vector<int> _counts;        // _counts[s * _k + c]
                vector<uint64_t> _present;  // colors present in set s
                vector<int> _unassigned;

                uint64_t _budget;
                uint64_t & _nodes;

                auto missing(int s) const -> int
                {
                    return _k - std::popcount(_present[s]);
                }

                auto assign(int v, int c) -> bool
                {
                    _color[v] = c;
                    bool ok = true;
                    for (auto s : _sets_of[v]) {
                        --_unassigned[s];
                        if (1 == ++_counts[s * _k + c])
                            _present[s] |= uint64_t{1} << c;
                        if (missing(s) > _unassigned[s])
                            ok = false;
                    }
                    return ok;
                }

                auto unassign(int v) -> void
                {
                    auto c = _color[v];
                    for (auto s : _sets_of[v]) {
                        ++_unassigned[s];
                        if (0 == --_counts[s * _k + c])
                            _present[s] &= ~(uint64_t{1} << c);
                    }
                    _color[v] = -1;
                }

                auto search(int position, int highest_used) -> bool
                {
                    if (position == _n)
                        return true;

                    int v = _order[position];
                    int limit = std::min(_k - 1, highest_used + 1);
                    for (int c = 0 ; c <= limit ; ++c) {
                        if (++_nodes > _budget)
                            throw BudgetExceeded(_nodes);
                        bool ok = assign(v, c);
                        if (ok && search(position + 1, std::max(highest_used, c)))
                            return true;
                        unassign(v);
                    }
                    return false;
                }

            public:
                RainbowSearch(int n, const vector<VertexSet> & sets, int k, uint64_t budget, uint64_t & nodes) :
                    _n(n),
                    _k(k),
                    _sets_of(n),
                    _color(n, -1),
                    _counts(sets.size() * k, 0),
                    _present(sets.size(), 0),
                    _unassigned(sets.size(), 0),
                    _budget(budget),
                    _nodes(nodes)
                {
                    vector<int> smallest(n, n + 1);
                    for (std::size_t s = 0 ; s < sets.size() ; ++s) {
                        _sets.push_back(sets[s].bits());
                        _unassigned[s] = sets[s].size();
                        for (auto v : sets[s].members()) {
                            _sets_of[v].push_back(int(s));
                            smallest[v] = std::min(smallest[v], sets[s].size());
                        }
                    }

                    // most constrained first, ties by index
                    _order.resize(n);
                    std::iota(_order.begin(), _order.end(), 0);
                    std::stable_sort(_order.begin(), _order.end(),
                            [&] (int a, int b) { return smallest[a] < smallest[b]; });
                }

                auto run() -> optional<vector<int>>
                {
                    for (int s = 0 ; s < int(_sets.size()) ; ++s)
                        if (missing(s) > _unassigned[s])
                            return std::nullopt;
                    if (search(0, -1))
                        return _color;
                    return std::nullopt;
                }
        };

        auto to_partition(int order, const vector<int> & coloring, int k) -> Partition
        {
            Partition result{ order, vector<VertexSet>(k, VertexSet(order)) };
            for (int v = 0 ; v < order ; ++v)
                result.classes[coloring[v]] = result.classes[coloring[v]].with(v);
            return result;
        }

        struct Solved
        {
            int value;
            Partition witness;
        };

        auto solve_descending(const Graph & g, const vector<VertexSet> & sets, int upper,
                const SolverOptions & options, uint64_t & nodes) -> Solved
        {
            for (int k = upper ; k >= 2 ; --k)
                if (auto coloring = rainbow_coloring(g.order(), sets, k, options.node_budget, nodes))
                    return { k, to_partition(g.order(), *coloring, k) };
            return { 1, Partition{ g.order(), { VertexSet::full(g.order()) } } };
        }
    }

    auto rainbow_coloring(int order, const vector<VertexSet> & sets, int k,
            uint64_t node_budget, uint64_t & nodes) -> optional<vector<int>>
    {
        if (k < 1 || k > 64)
            throw std::invalid_argument("class count must be in 1..64");
        return RainbowSearch(order, sets, k, node_budget, nodes).run();
    }

    auto strong_domatic_number(const Graph & g, const SolverOptions & options) -> DstResult
    {
        if (0 == g.order())
            throw std::invalid_argument("strong domatic number of the empty graph");

        optional<int> gamma;
        if (options.use_gamma_cap)
            gamma = strong_domination_number(g).size;

        DstResult result;
        result.bounds_used = dst_bounds(g, gamma);
        auto solved = solve_descending(g, covering_sets(g, DominationKind::strong), result.bounds_used.upper(), options, result.nodes);
        result.value = solved.value;
        result.witness = std::move(solved.witness);
        return result;
    }

    auto domatic_partition(const Graph & g, const SolverOptions & options) -> DomaticResult
    {
        if (0 == g.order())
            throw std::invalid_argument("domatic number of the empty graph");

        DomaticResult result;
        auto solved = solve_descending(g, covering_sets(g, DominationKind::classic), g.min_degree() + 1, options, result.nodes);
        result.value = solved.value;
        result.witness = std::move(solved.witness);
        return result;
    }

    auto domatic_number(const Graph & g, const SolverOptions & options) -> int
    {
        return domatic_partition(g, options).value;
    }
}
