#include <strongdom/oracle.hpp>
#include <strongdom/domination.hpp>

#include <algorithm>
#include <stdexcept>
#include <vector>

using std::uint64_t;
using std::vector;

namespace strongdom
{
    namespace
    {
        auto check_budget(const Graph & g) -> void
        {
            if (g.order() < 1 || g.order() > oracle_max_order)
                throw std::invalid_argument("oracle accepts orders 1.." + std::to_string(oracle_max_order)
                        + ", got " + std::to_string(g.order()));
        }
    }

    auto oracle_strong_domatic(const Graph & g) -> int
    {
        check_budget(g);
        int n = g.order();

        // growth[i] is the block of vertex i; prefix_max[i] = max(growth[0..i])
        vector<int> growth(n, 0), prefix_max(n, 0);
        int best = 1;
        while (true) {
            int blocks = prefix_max[n - 1] + 1;
            if (blocks > best) {
                vector<uint64_t> classes(blocks, 0);
                for (int v = 0 ; v < n ; ++v)
                    classes[growth[v]] |= uint64_t{1} << v;
                bool all = std::all_of(classes.begin(), classes.end(),
                        [&] (uint64_t c) { return is_strong_dominating_set(g, VertexSet(n, c)); });
                if (all)
                    best = blocks;
            }

            // next restricted-growth string
            int i = n - 1;
            while (i > 0 && growth[i] == prefix_max[i - 1] + 1)
                --i;
            if (i == 0)
                break;
            ++growth[i];
            prefix_max[i] = std::max(prefix_max[i - 1], growth[i]);
            for (int j = i + 1 ; j < n ; ++j) {
                growth[j] = 0;
                prefix_max[j] = prefix_max[i];
            }
        }
        return best;
    }

    auto oracle_gamma_st(const Graph & g) -> int
    {
        check_budget(g);
        int n = g.order();
        for (int k = 0 ; k <= n ; ++k)
            for (uint64_t mask = 0 ; mask < (uint64_t{1} << n) ; ++mask)
                if (std::popcount(mask) == k && is_strong_dominating_set(g, VertexSet(n, mask)))
                    return k;
        throw std::logic_error("the full vertex set always strong-dominates");
    }
}
