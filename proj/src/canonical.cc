#include <strongdom/canonical.hpp>

#include <algorithm>
#include <stdexcept>

using std::uint64_t;
using std::uint8_t;
using std::vector;

namespace strongdom
{
    auto CanonicalForm::to_hex() const -> std::string
    {
        static constexpr char digits[] = "0123456789abcdef";
        std::string result = std::to_string(order) + ":";
        for (auto b : bytes) {
            result += digits[b >> 4];
            result += digits[b & 0xf];
        }
        return result;
    }

    namespace
    {
        using Coloring = vector<int>;

        auto pack_upper_triangle(const Graph & g, const vector<Vertex> & vertex_at) -> vector<uint8_t>
        {
            int n = g.order();
            std::size_t bit_count = std::size_t(n) * (n > 0 ? n - 1 : 0) / 2;
            vector<uint8_t> result((bit_count + 7) / 8, 0);
            std::size_t k = 0;
            for (int j = 1 ; j < n ; ++j)
                for (int i = 0 ; i < j ; ++i, ++k)
                    if ((g.row(vertex_at[i]) >> vertex_at[j]) & 1u)
                        result[k / 8] |= uint8_t(0x80u >> (k % 8));
            return result;
        }

        auto color_count(const Coloring & colors) -> int
        {
            return colors.empty() ? 0 : 1 + *std::max_element(colors.begin(), colors.end());
        }

        /// Dense ranks of the keys, in ascending key order.
        auto rank(const vector<vector<int>> & keys) -> Coloring
        {
            vector<int> order(keys.size());
            for (std::size_t i = 0 ; i < order.size() ; ++i)
                order[i] = int(i);
            std::sort(order.begin(), order.end(), [&] (int a, int b) { return keys[a] < keys[b]; });

            Coloring result(keys.size(), 0);
            int current = 0;
            for (std::size_t i = 0 ; i < order.size() ; ++i) {
                if (i > 0 && keys[order[i]] != keys[order[i - 1]])
                    ++current;
                result[order[i]] = current;
            }
            return result;
        }

        /// Split cells by (own color, neighbor count per color) until stable.
        /// The new order is fixed by the signatures alone, so it commutes with
        /// relabeling.
        auto refine(const Graph & g, Coloring colors) -> Coloring
        {
            int n = g.order();
            while (true) {
                int count = color_count(colors);
                vector<vector<int>> signature(n, vector<int>(count + 1, 0));
                for (int v = 0 ; v < n ; ++v) {
                    signature[v][0] = colors[v];
                    for (uint64_t b = g.row(v) ; b ; b &= b - 1)
                        ++signature[v][1 + colors[std::countr_zero(b)]];
                }
                auto next = rank(signature);
                if (color_count(next) == count)
                    return next;
                colors = std::move(next);
            }
        }

        /// v moves to a cell of its own placed just before the rest of its cell.
        auto individualize(const Coloring & colors, Vertex v) -> Coloring
        {
            vector<vector<int>> keys(colors.size());
            for (std::size_t u = 0 ; u < colors.size() ; ++u)
                keys[u] = { colors[u], (int(u) != v && colors[u] == colors[v]) ? 1 : 0 };
            return rank(keys);
        }

        class LabelingSearch
        {
            private:
                const Graph & _g;
                int _n;

                bool _have_best = false;
                vector<uint8_t> _best_bits;
                Coloring _best_labeling;

                vector<vector<Vertex>> _automorphisms;
                vector<Vertex> _prefix;

                static constexpr std::size_t max_automorphisms = 128;

                auto twins(Vertex u, Vertex v) const -> bool
                {
                    return (_g.row(u) & ~(uint64_t{1} << v)) == (_g.row(v) & ~(uint64_t{1} << u));
                }

                auto known_equivalent(Vertex u, Vertex v) const -> bool
                {
                    if (twins(u, v))
                        return true;
                    for (auto & a : _automorphisms)
                        if (a[u] == v && std::all_of(_prefix.begin(), _prefix.end(), [&] (Vertex p) { return a[p] == p; }))
                            return true;
                    return false;
                }

                auto leaf(const Coloring & labeling) -> void
                {
                    vector<Vertex> vertex_at(_n);
                    for (int v = 0 ; v < _n ; ++v)
                        vertex_at[labeling[v]] = v;
                    auto bits = pack_upper_triangle(_g, vertex_at);

                    if (! _have_best || bits < _best_bits) {
                        _have_best = true;
                        _best_bits = std::move(bits);
                        _best_labeling = labeling;
                    }
                    else if (bits == _best_bits && _automorphisms.size() < max_automorphisms) {
                        vector<Vertex> best_vertex_at(_n);
                        for (int v = 0 ; v < _n ; ++v)
                            best_vertex_at[_best_labeling[v]] = v;
                        vector<Vertex> automorphism(_n);
                        for (int v = 0 ; v < _n ; ++v)
                            automorphism[v] = best_vertex_at[labeling[v]];
                        _automorphisms.push_back(std::move(automorphism));
                    }
                }

                auto visit(const Coloring & colors) -> void
                {
                    int count = color_count(colors);
                    if (count == _n) {
                        leaf(colors);
                        return;
                    }

                    vector<int> sizes(count, 0);
                    for (auto c : colors)
                        ++sizes[c];
                    int target = -1;
                    for (int c = 0 ; c < count ; ++c)
                        if (sizes[c] > 1 && (target < 0 || sizes[c] < sizes[target]))
                            target = c;

                    vector<Vertex> tried;
                    for (Vertex v = 0 ; v < _n ; ++v) {
                        if (colors[v] != target)
                            continue;
                        if (std::any_of(tried.begin(), tried.end(), [&] (Vertex u) { return known_equivalent(u, v); }))
                            continue;
                        tried.push_back(v);
                        _prefix.push_back(v);
                        visit(refine(_g, individualize(colors, v)));
                        _prefix.pop_back();
                    }
                }

            public:
                explicit LabelingSearch(const Graph & g) :
                    _g(g),
                    _n(g.order())
                {
                }

                auto run() -> CanonicalLabeling
                {
                    visit(refine(_g, Coloring(_n, 0)));
                    return { _best_labeling, CanonicalForm{ _n, _best_bits } };
                }
        };
    }

    auto adjacency_bits(const Graph & g) -> vector<uint8_t>
    {
        vector<Vertex> identity(g.order());
        for (int v = 0 ; v < g.order() ; ++v)
            identity[v] = v;
        return pack_upper_triangle(g, identity);
    }

    auto canonical_labeling(const Graph & g) -> CanonicalLabeling
    {
        if (g.order() > canonical_max_order)
            throw std::invalid_argument("canonical labeling supports orders up to " + std::to_string(canonical_max_order)
                    + ", got " + std::to_string(g.order()));
        if (0 == g.order())
            return { {}, CanonicalForm{ 0, {} } };
        return LabelingSearch(g).run();
    }

    auto canonical_form(const Graph & g) -> CanonicalForm
    {
        return canonical_labeling(g).form;
    }

    auto canonical_graph(const Graph & g) -> Graph
    {
        return g.permuted(canonical_labeling(g).labeling);
    }

    auto are_isomorphic(const Graph & g, const Graph & h) -> bool
    {
        if (g.order() != h.order() || g.edge_count() != h.edge_count())
            return false;
        auto dg = g.degree_sequence(), dh = h.degree_sequence();
        std::sort(dg.begin(), dg.end());
        std::sort(dh.begin(), dh.end());
        if (dg != dh)
            return false;
        return canonical_form(g) == canonical_form(h);
    }
}
