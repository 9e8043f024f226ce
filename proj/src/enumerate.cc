#include <strongdom/enumerate.hpp>
#include <strongdom/canonical.hpp>

#include <map>
#include <stdexcept>
#include <string>

using std::uint64_t;
using std::vector;

namespace strongdom
{
    namespace
    {
        /// Row a beats row b when, at the first column where they differ, a has the edge.
        auto row_greater(uint64_t a, uint64_t b) -> bool
        {
            uint64_t d = a ^ b;
            return 0 != (a & d & (~d + 1));
        }

        auto swap_bits(uint64_t r, int p, int q) -> uint64_t
        {
            uint64_t bp = (r >> p) & 1u, bq = (r >> q) & 1u;
            if (bp != bq)
                r ^= (uint64_t{1} << p) | (uint64_t{1} << q);
            return r;
        }

        class RegularGenerator
        {
            private:
                int _n, _k;
                bool _connected_only;
                vector<uint64_t> _rows;
                vector<int> _degree;
                std::map<CanonicalForm, Graph> _classes;
                uint64_t _candidates = 0;

                /// False if exchanging p and p+1 gives a larger prefix of rows 0..last.
                auto survives_swap(int p, int last) const -> bool
                {
                    for (int t = 0 ; t <= last ; ++t) {
                        int source = t == p ? p + 1 : t == p + 1 ? p : t;
                        uint64_t swapped = swap_bits(_rows[source], p, p + 1);
                        if (swapped != _rows[t])
                            return ! row_greater(swapped, _rows[t]);
                    }
                    return true;
                }

                auto feasible_after(int i) const -> bool
                {
                    int remaining = 0;
                    for (int j = i + 1 ; j < _n ; ++j) {
                        int missing = _k - _degree[j];
                        if (missing > _n - i - 2)
                            return false;
                        remaining += missing;
                    }
                    return 0 == remaining % 2;
                }

                auto add_edge(int u, int v) -> void
                {
                    _rows[u] |= uint64_t{1} << v;
                    _rows[v] |= uint64_t{1} << u;
                    ++_degree[u];
                    ++_degree[v];
                }

                auto remove_edge(int u, int v) -> void
                {
                    _rows[u] &= ~(uint64_t{1} << v);
                    _rows[v] &= ~(uint64_t{1} << u);
                    --_degree[u];
                    --_degree[v];
                }

                auto complete() -> void
                {
                    ++_candidates;
                    auto g = Graph::from_adjacency_rows(_n, _rows);
                    if (_connected_only && ! g.is_connected())
                        return;
                    auto labeling = canonical_labeling(g);
                    if (! _classes.contains(labeling.form))
                        _classes.emplace(labeling.form, g.permuted(labeling.labeling));
                }

                auto row_finished(int i) -> void
                {
                    if (! feasible_after(i))
                        return;
                    for (int p = 0 ; p + 1 <= i ; ++p)
                        if (! survives_swap(p, i))
                            return;
                    fill_row(i + 1);
                }

                /// Choose `need` more neighbors of row i from columns >= from.
                auto choose(int i, int from, int need) -> void
                {
                    if (0 == need) {
                        row_finished(i);
                        return;
                    }
                    for (int j = from ; j <= _n - need ; ++j) {
                        if (_degree[j] >= _k)
                            continue;
                        add_edge(i, j);
                        choose(i, j + 1, need - 1);
                        remove_edge(i, j);
                    }
                }

                auto fill_row(int i) -> void
                {
                    if (i == _n) {
                        complete();
                        return;
                    }
                    choose(i, i + 1, _k - _degree[i]);
                }

            public:
                RegularGenerator(int n, int k, bool connected_only) :
                    _n(n),
                    _k(k),
                    _connected_only(connected_only),
                    _rows(n, 0),
                    _degree(n, 0)
                {
                }

                auto run(EnumerationStats * stats) -> vector<Graph>
                {
                    fill_row(0);
                    vector<Graph> result;
                    result.reserve(_classes.size());
                    for (auto & [form, g] : _classes)
                        result.push_back(g);
                    if (stats)
                        *stats = { _candidates, _classes.size() };
                    return result;
                }
        };
    }

    auto enumerate_regular(int n, int k, bool connected_only, EnumerationStats * stats) -> vector<Graph>
    {
        if (n < 1 || n > enumeration_max_order)
            throw std::invalid_argument("enumeration supports orders 1.." + std::to_string(enumeration_max_order));
        if (k < 0 || k >= n)
            throw std::invalid_argument("degree must satisfy 0 <= k < n");
        if (0 != (n * k) % 2)
            throw std::invalid_argument("no " + std::to_string(k) + "-regular graph on " + std::to_string(n) + " vertices: n*k is odd");
        return RegularGenerator(n, k, connected_only).run(stats);
    }
}
