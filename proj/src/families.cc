#include <strongdom/families.hpp>

#include <array>
#include <stdexcept>
#include <utility>

using std::string;
using std::string_view;
using std::uint64_t;
using std::vector;

namespace strongdom
{
    namespace
    {
        struct FamilyInfo
        {
            FamilyKind kind;
            string_view name;
            int arity;
        };

        constexpr std::array<FamilyInfo, 9> families{ {
            { FamilyKind::path, "path", 1 },
            { FamilyKind::cycle, "cycle", 1 },
            { FamilyKind::complete, "complete", 1 },
            { FamilyKind::complete_bipartite, "complete_bipartite", 2 },
            { FamilyKind::star, "star", 1 },
            { FamilyKind::empty, "empty", 1 },
            { FamilyKind::friendship, "friendship", 1 },
            { FamilyKind::book, "book", 1 },
            { FamilyKind::petersen, "petersen", 0 }
        } };

        auto info(FamilyKind kind) -> const FamilyInfo &
        {
            for (auto & f : families)
                if (f.kind == kind)
                    return f;
            throw std::invalid_argument("unknown family kind");
        }

        auto require(bool condition, const string & what) -> void
        {
            if (! condition)
                throw std::invalid_argument(what);
        }
    }

    auto family_name(FamilyKind kind) -> string_view
    {
        return info(kind).name;
    }

    auto parse_family_kind(string_view name) -> std::optional<FamilyKind>
    {
        for (auto & f : families)
            if (f.name == name)
                return f.kind;
        return std::nullopt;
    }

    auto family_arity(FamilyKind kind) -> int
    {
        return info(kind).arity;
    }

    auto basic_family(const FamilySpec & spec) -> Graph
    {
        auto arity = family_arity(spec.kind);
        require(int(spec.params.size()) == arity, string(family_name(spec.kind)) + " takes "
                + std::to_string(arity) + " parameter(s), got " + std::to_string(spec.params.size()));

        auto & p = spec.params;
        switch (spec.kind) {
            case FamilyKind::path:               return path(p[0]);
            case FamilyKind::cycle:              return cycle(p[0]);
            case FamilyKind::complete:           return complete(p[0]);
            case FamilyKind::complete_bipartite: return complete_bipartite(p[0], p[1]);
            case FamilyKind::star:               return star(p[0]);
            case FamilyKind::empty:              return empty(p[0]);
            case FamilyKind::friendship:         return friendship(p[0]);
            case FamilyKind::book:               return book(p[0]);
            case FamilyKind::petersen:           return petersen();
        }
        throw std::invalid_argument("unknown family kind");
    }

    auto path(int n) -> Graph
    {
        require(n >= 1, "path needs n >= 1");
        vector<Edge> edges;
        for (int i = 0 ; i + 1 < n ; ++i)
            edges.emplace_back(i, i + 1);
        return Graph::from_edge_list(n, edges);
    }

    auto cycle(int n) -> Graph
    {
        require(n >= 3, "cycle needs n >= 3");
        auto edges = path(n).edges();
        edges.emplace_back(n - 1, 0);
        return Graph::from_edge_list(n, edges);
    }

    auto complete(int n) -> Graph
    {
        require(n >= 1, "complete graph needs n >= 1");
        vector<Edge> edges;
        for (int i = 0 ; i < n ; ++i)
            for (int j = i + 1 ; j < n ; ++j)
                edges.emplace_back(i, j);
        return Graph::from_edge_list(n, edges);
    }

    auto complete_bipartite(int a, int b) -> Graph
    {
        require(a >= 1 && b >= 1, "complete bipartite graph needs both parts non-empty");
        vector<Edge> edges;
        for (int i = 0 ; i < a ; ++i)
            for (int j = 0 ; j < b ; ++j)
                edges.emplace_back(i, a + j);
        return Graph::from_edge_list(a + b, edges);
    }

    auto star(int n) -> Graph
    {
        require(n >= 1, "star needs n >= 1 leaves");
        return complete_bipartite(1, n);
    }

    auto empty(int n) -> Graph
    {
        require(n >= 0, "empty graph needs n >= 0");
        return Graph::from_edge_list(n, {});
    }

    auto friendship(int n) -> Graph
    {
        require(n >= 1, "friendship graph needs n >= 1 triangles");
        vector<Edge> edges;
        for (int i = 1 ; i <= n ; ++i) {
            edges.emplace_back(0, 2 * i - 1);
            edges.emplace_back(0, 2 * i);
            edges.emplace_back(2 * i - 1, 2 * i);
        }
        return Graph::from_edge_list(2 * n + 1, edges);
    }

    auto book(int n) -> Graph
    {
        require(n >= 1, "book graph needs n >= 1 pages");
        vector<Edge> edges{ { 0, 1 } };
        for (int i = 1 ; i <= n ; ++i) {
            edges.emplace_back(0, 2 * i);
            edges.emplace_back(1, 2 * i + 1);
            edges.emplace_back(2 * i, 2 * i + 1);
        }
        return Graph::from_edge_list(2 * n + 2, edges);
    }

    auto petersen() -> Graph
    {
        return Graph::from_edge_list(10, {
                { 0, 1 }, { 1, 2 }, { 2, 3 }, { 3, 4 }, { 4, 0 },
                { 0, 5 }, { 1, 6 }, { 2, 7 }, { 3, 8 }, { 4, 9 },
                { 5, 7 }, { 7, 9 }, { 9, 6 }, { 6, 8 }, { 8, 5 } });
    }

    auto corona(const Graph & g, const Graph & h) -> Graph
    {
        int n = g.order(), m = h.order();
        require(n >= 1, "corona needs a non-empty host graph");
        require(n * (1 + m) <= max_order, "corona order exceeds " + std::to_string(max_order));

        auto edges = g.edges();
        auto copy_edges = h.edges();
        for (int i = 0 ; i < n ; ++i) {
            int base = n + i * m;
            for (auto & [u, v] : copy_edges)
                edges.emplace_back(base + u, base + v);
            for (int j = 0 ; j < m ; ++j)
                edges.emplace_back(i, base + j);
        }
        return Graph::from_edge_list(n * (1 + m), edges);
    }

    auto disjoint_union(const Graph & g, const Graph & h) -> Graph
    {
        int shift = g.order();
        require(shift + h.order() <= max_order, "union order exceeds " + std::to_string(max_order));
        auto edges = g.edges();
        for (auto & [u, v] : h.edges())
            edges.emplace_back(shift + u, shift + v);
        return Graph::from_edge_list(shift + h.order(), edges);
    }

    auto uniform_int(std::mt19937_64 & rng, int lo, int hi) -> int
    {
        if (hi < lo)
            throw std::invalid_argument("empty integer range");
        auto span = uint64_t(hi - lo) + 1;
        return lo + int(rng() % span);
    }

    auto random_graph(int n, int permille, std::mt19937_64 & rng) -> Graph
    {
        require(n >= 0 && n <= max_order, "random graph order out of range");
        require(permille >= 0 && permille <= 1000, "edge probability must be in 0..1000 permille");
        vector<Edge> edges;
        for (int i = 0 ; i < n ; ++i)
            for (int j = i + 1 ; j < n ; ++j)
                if (int(rng() % 1000) < permille)
                    edges.emplace_back(i, j);
        return Graph::from_edge_list(n, edges);
    }

    auto random_corpus(std::uint64_t seed, int count, int largest) -> vector<Graph>
    {
        require(count >= 0, "corpus size must be non-negative");
        require(largest >= 1 && largest <= max_order, "random corpus order out of range");
        std::mt19937_64 rng(seed);
        vector<Graph> result;
        for (int i = 0 ; i < count ; ++i) {
            int n = uniform_int(rng, 1, largest);
            int permille = uniform_int(rng, 0, 1000);
            result.push_back(random_graph(n, permille, rng));
        }
        return result;
    }
}
