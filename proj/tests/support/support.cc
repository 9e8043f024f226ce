#include "support.hpp"

#include <strongdom/canonical.hpp>
#include <strongdom/domination.hpp>
#include <strongdom/families.hpp>

#include <algorithm>
#include <numeric>
#include <queue>
#include <stdexcept>

using std::uint64_t;
using std::uint8_t;
using std::vector;

namespace strongdom::support
{
    auto brute_force_form(const Graph & g) -> vector<uint8_t>
    {
        if (g.order() > 8)
            throw std::invalid_argument("brute-force form limited to order 8");
        vector<Vertex> perm(g.order());
        std::iota(perm.begin(), perm.end(), 0);
        vector<uint8_t> best;
        bool first = true;
        do {
            auto bits = adjacency_bits(g.permuted(perm));
            if (first || bits < best) {
                best = std::move(bits);
                first = false;
            }
        } while (std::next_permutation(perm.begin(), perm.end()));
        return best;
    }

    auto all_minimum_strong_dominating_sets(const Graph & g) -> vector<VertexSet>
    {
        int n = g.order();
        vector<VertexSet> result;
        int best = n + 1;
        for (uint64_t bits = 0 ; bits < (uint64_t{1} << n) ; ++bits) {
            VertexSet d(n, bits);
            if (d.size() > best || ! is_strong_dominating_set(g, d))
                continue;
            if (d.size() < best) {
                best = d.size();
                result.clear();
            }
            result.push_back(d);
        }
        return result;
    }

    auto members_less(const VertexSet & a, const VertexSet & b) -> bool
    {
        return a.members() < b.members();
    }

    auto all_partitions(int n) -> vector<vector<VertexSet>>
    {
        vector<vector<VertexSet>> result;
        vector<int> rgs(n, 0);
        auto emit = [&] {
            int blocks = n ? 1 + *std::max_element(rgs.begin(), rgs.end()) : 0;
            vector<VertexSet> classes(blocks, VertexSet(n));
            for (Vertex v = 0 ; v < n ; ++v)
                classes[rgs[v]] = classes[rgs[v]].with(v);
            result.push_back(std::move(classes));
        };
        auto extend = [&] (auto & self, int i, int used) -> void {
            if (i == n) {
                emit();
                return;
            }
            for (int c = 0 ; c <= used ; ++c) {
                rgs[i] = c;
                self(self, i + 1, std::max(used, c + 1));
            }
        };
        if (n == 0)
            emit();
        else
            extend(extend, 1, 1);
        return result;
    }

    auto girth(const Graph & g) -> int
    {
        int n = g.order(), best = 0;
        for (Vertex s = 0 ; s < n ; ++s) {
            vector<int> dist(n, -1), parent(n, -1);
            std::queue<Vertex> queue;
            dist[s] = 0;
            queue.push(s);
            while (! queue.empty()) {
                auto u = queue.front();
                queue.pop();
                for (auto v : g.neighbors(u).members()) {
                    if (dist[v] < 0) {
                        dist[v] = dist[u] + 1;
                        parent[v] = u;
                        queue.push(v);
                    }
                    else if (parent[u] != v) {
                        int cycle = dist[u] + dist[v] + 1;
                        if (0 == best || cycle < best)
                            best = cycle;
                    }
                }
            }
        }
        return best;
    }

    auto random_permutation(int n, std::mt19937_64 & rng) -> vector<Vertex>
    {
        vector<Vertex> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        for (int i = n - 1 ; i > 0 ; --i)
            std::swap(perm[i], perm[uniform_int(rng, 0, i)]);
        return perm;
    }

    auto sample_graphs(int max_order, uint64_t seed, int random_count) -> vector<Graph>
    {
        vector<Graph> candidates;
        for (int n = 1 ; n <= max_order ; ++n) {
            candidates.push_back(path(n));
            candidates.push_back(complete(n));
            candidates.push_back(empty(n));
            candidates.push_back(star(n));
            if (n >= 3)
                candidates.push_back(cycle(n));
            candidates.push_back(friendship(n));
            candidates.push_back(book(n));
            for (int b = n ; b <= max_order ; ++b)
                candidates.push_back(complete_bipartite(n, b));
        }
        candidates.push_back(petersen());
        for (int n = 1 ; n <= 4 ; ++n) {
            candidates.push_back(corona(path(n), complete(1)));
            candidates.push_back(corona(complete(n), empty(2)));
            candidates.push_back(corona(complete(n), complete(n)));
        }
        candidates.push_back(disjoint_union(complete(4), cycle(5)));
        candidates.push_back(disjoint_union(star(3), path(4)));

        for (auto & g : random_corpus(seed, random_count, max_order))
            candidates.push_back(g);

        vector<Graph> result;
        for (auto & g : candidates)
            if (g.order() >= 1 && g.order() <= max_order)
                result.push_back(g);
        return result;
    }
}
