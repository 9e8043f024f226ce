#include <strongdom/claims.hpp>
#include <strongdom/canonical.hpp>
#include <strongdom/domination.hpp>
#include <strongdom/enumerate.hpp>
#include <strongdom/families.hpp>
#include <strongdom/graph_io.hpp>

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>

using std::int64_t;
using std::string;
using std::vector;

namespace strongdom
{
    auto status_name(ClaimStatus status) -> std::string_view
    {
        switch (status) {
            case ClaimStatus::pass:           return "pass";
            case ClaimStatus::fail:           return "fail";
            case ClaimStatus::skipped_budget: return "skipped-budget";
        }
        throw std::invalid_argument("unknown claim status");
    }

    auto count_failures(const vector<ClaimResult> & results) -> int
    {
        return int(std::count_if(results.begin(), results.end(),
                    [] (const ClaimResult & r) { return r.status == ClaimStatus::fail && ! r.informational; }));
    }

    auto measure(const Graph & g, const SolverOptions & options) -> GraphMetrics
    {
        GraphMetrics m;
        m.order = g.order();
        m.min_degree = g.min_degree();
        m.max_degree = g.max_degree();
        m.max_degree_count = g.max_degree_count();
        m.connected = g.is_connected();
        m.regular = g.is_regular();
        m.dst = strong_domatic_number(g, options).value;
        m.domatic = domatic_partition(g, options).value;
        m.gamma = domination_number(g);
        m.gamma_st = strong_domination_number(g).size;
        m.gamma_w = weak_domination_number(g);
        return m;
    }

    auto bound_violations(const GraphMetrics & m) -> vector<string>
    {
        vector<string> result;
        if (m.dst < 1 || m.dst > m.max_degree_count)
            result.emplace_back("1 <= d_st <= m");
        if (m.dst > m.domatic)
            result.emplace_back("d_st <= d");
        if (m.domatic > m.min_degree + 1)
            result.emplace_back("d <= delta + 1");
        if (m.dst * m.gamma_st > m.order)
            result.emplace_back("d_st * gamma_st <= n");
        if (m.gamma > m.gamma_st)
            result.emplace_back("gamma <= gamma_st");
        if (m.gamma > m.gamma_w)
            result.emplace_back("gamma <= gamma_w");
        if (m.min_degree == 1 && m.dst > 2)
            result.emplace_back("delta = 1 => d_st <= 2");
        if (m.regular && m.domatic != m.dst)
            result.emplace_back("regular => d = d_st");
        return result;
    }

    auto weak_strong_inequality_holds(const GraphMetrics & m) -> bool
    {
        return int64_t(m.max_degree + 1) * m.gamma_w + 3 * int64_t(m.gamma_st) <= int64_t(m.order) * (m.max_degree + 1);
    }

    auto random_corona_pair(std::mt19937_64 & rng, int max_host, int max_guest) -> std::pair<Graph, Graph>
    {
        if (max_host < 1 || max_guest < 1)
            throw std::invalid_argument("corona pair orders must be positive");
        int host_order = uniform_int(rng, 1, max_host);
        auto host = random_graph(host_order, 500, rng);
        int guest_order = uniform_int(rng, 1, max_guest);
        auto guest = random_graph(guest_order, 500, rng);
        return { std::move(host), std::move(guest) };
    }

    namespace
    {
        using Clock = std::chrono::steady_clock;

        auto render_multiset(vector<int> values) -> string
        {
            std::sort(values.begin(), values.end());
            string result = "[";
            for (std::size_t i = 0 ; i < values.size() ; ++i)
                result += (i ? "," : "") + std::to_string(values[i]);
            return result + "]";
        }

        auto violations_text(int count, const string & first) -> string
        {
            string result = std::to_string(count) + (count == 1 ? " violation" : " violations");
            if (count > 0)
                result += "; first " + first;
            return result;
        }

        class Registry
        {
            private:
                ClaimOptions _options;
                SolverOptions _solver;
                vector<ClaimResult> _results;

                /// Every graph measured so far, keyed by graph6; nullopt marks a budget overrun.
                std::map<string, std::optional<GraphMetrics>> _corpus;

                auto metrics(const Graph & g) -> const GraphMetrics &
                {
                    auto key = to_graph6(g);
                    auto found = _corpus.find(key);
                    if (found == _corpus.end()) {
                        try {
                            found = _corpus.emplace(key, measure(g, _solver)).first;
                        }
                        catch (const BudgetExceeded &) {
                            _corpus.emplace(key, std::nullopt);
                            throw;
                        }
                    }
                    if (! found->second)
                        throw BudgetExceeded(_solver.node_budget);
                    return *found->second;
                }

                auto dst(const Graph & g) -> int
                {
                    return metrics(g).dst;
                }

                /// Runs body, which fills expected and computed and returns
                /// whether they agree; a budget overrun becomes skipped-budget.
                auto record(string id, vector<int64_t> params, bool informational,
                        const std::function<bool (string &, string &)> & body) -> void
                {
                    ClaimResult result;
                    result.id = std::move(id);
                    result.params = std::move(params);
                    result.informational = informational;

                    auto start = Clock::now();
                    try {
                        result.status = body(result.expected, result.computed) ? ClaimStatus::pass : ClaimStatus::fail;
                    }
                    catch (const BudgetExceeded &) {
                        result.status = ClaimStatus::skipped_budget;
                        result.computed = "budget exceeded";
                    }
                    result.ms = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
                    _results.push_back(std::move(result));
                }

                auto value(string id, vector<int64_t> params, int expected, const std::function<int ()> & compute) -> void
                {
                    record(std::move(id), std::move(params), false, [&] (string & e, string & c) {
                        e = std::to_string(expected);
                        auto v = compute();
                        c = std::to_string(v);
                        return v == expected;
                    });
                }

                auto dst_value(string id, vector<int64_t> params, int expected, const Graph & g) -> void
                {
                    value(std::move(id), std::move(params), expected, [&] { return dst(g); });
                }

                auto fits(int order) const -> bool
                {
                    return order <= _options.max_n;
                }

                auto families() -> void
                {
                    for (int n = 4 ; fits(n) ; ++n)
                        dst_value("prop2.6.i-path", { n }, 2, path(n));

                    for (int n = 3 ; fits(n) ; ++n)
                        dst_value("prop2.6.ii-cycle", { n }, n % 3 == 0 ? 3 : 2, cycle(n));

                    for (int n = 3 ; fits(n) ; ++n)
                        value("prop2.6.ii-gamma-cycle", { n }, (n + 2) / 3, [&] { return metrics(cycle(n)).gamma_st; });

                    for (int a = 1 ; fits(2 * a + 1) ; ++a)
                        for (int b = a + 1 ; fits(a + b) ; ++b)
                            dst_value("prop2.6.iii-bipartite", { a, b }, 1, complete_bipartite(a, b));

                    for (int a = 1 ; fits(2 * a) ; ++a)
                        dst_value("prop2.6.iii-bipartite-balanced", { a }, a, complete_bipartite(a, a));

                    for (int n = 1 ; fits(n + 1) ; ++n)
                        dst_value("rem2.3-star", { n }, 1, star(n));

                    for (int n = 1 ; fits(n) ; ++n)
                        dst_value("rem2.3-complete", { n }, n, complete(n));

                    // F_1 is K_3, whose value follows the complete-graph formula.
                    dst_value("prop2.6.iv-friendship-f1", { 1 }, 3, friendship(1));
                    for (int n = 2 ; fits(2 * n + 1) ; ++n)
                        dst_value("prop2.6.iv-friendship", { n }, 1, friendship(n));

                    for (int n = 1 ; fits(2 * n + 2) ; ++n)
                        dst_value("prop2.6.v-book", { n }, 2, book(n));
                }

                auto coronas() -> void
                {
                    for (int n = 2 ; fits(2 * n) ; ++n)
                        dst_value("thm2.7.i-path-corona", { n }, 2, corona(path(n), complete(1)));

                    for (int n = 3 ; fits(2 * n) ; ++n)
                        dst_value("thm2.7.ii-cycle-corona", { n }, 2, corona(cycle(n), complete(1)));

                    std::mt19937_64 rng(_options.seed);
                    for (int i = 0 ; i < 100 ; ++i) {
                        auto [g, h] = random_corona_pair(rng);
                        auto product = corona(g, h);
                        if (! fits(product.order()))
                            continue;
                        record("thm2.8-corona-bounds", { i, g.order(), h.order() }, false, [&] (string & e, string & c) {
                            auto upper = dst(g);
                            auto v = dst(product);
                            e = "1.." + std::to_string(upper);
                            c = std::to_string(v) + " (G " + to_graph6(g) + ", H " + to_graph6(h) + ")";
                            return 1 <= v && v <= upper;
                        });
                    }

                    for (int n = 1 ; fits(n * 2) ; ++n)
                        for (int m = 1 ; fits(n * (1 + m)) ; ++m)
                            dst_value("rem2.9-empty-corona", { n, m }, 1, corona(empty(n), empty(m)));

                    for (int n = 1 ; fits(n * (1 + n)) ; ++n)
                        dst_value("rem2.9-complete-corona", { n }, n, corona(complete(n), complete(n)));
                }

                auto cubic_catalogs() -> void
                {
                    const std::pair<int, int> counts[] = { { 4, 1 }, { 6, 2 }, { 8, 6 }, { 10, 21 } };
                    std::map<int, vector<Graph>> catalogs;
                    for (auto [n, expected] : counts) {
                        if (! fits(n))
                            continue;
                        value("sec3-cubic-count", { n }, expected, [&, n = n] {
                            catalogs[n] = enumerate_regular(n, 3);
                            return int(catalogs[n].size());
                        });
                    }

                    if (catalogs.contains(6))
                        for (std::size_t i = 0 ; i < catalogs[6].size() ; ++i)
                            dst_value("thm3.1-cubic6", { 6, int64_t(i) }, 3, catalogs[6][i]);

                    if (catalogs.contains(8))
                        record("thm3.2-cubic8-multiset", { 8 }, true, [&] (string & e, string & c) {
                            vector<int> values;
                            for (auto & g : catalogs[8])
                                values.push_back(dst(g));
                            e = render_multiset({ 4, 4, 4, 3, 2, 2 });
                            c = render_multiset(values);
                            return e == c;
                        });

                    if (fits(10))
                        dst_value("thm3.3-petersen", { 10 }, 2, petersen());

                    if (catalogs.contains(10)) {
                        auto & classes = catalogs[10];
                        auto p = petersen();
                        vector<bool> is_petersen;
                        for (auto & g : classes)
                            is_petersen.push_back(are_isomorphic(g, p));

                        value("thm3.4-petersen-class-count", { 10 }, 1,
                                [&] { return int(std::count(is_petersen.begin(), is_petersen.end(), true)); });

                        for (std::size_t i = 0 ; i < classes.size() ; ++i)
                            if (! is_petersen[i])
                                dst_value("thm3.4-cubic10", { 10, int64_t(i) }, 3, classes[i]);

                        value("cor3.5-petersen-unique-dst", { 10 }, 1, [&] {
                            auto target = dst(p);
                            return int(std::count_if(classes.begin(), classes.end(), [&] (const Graph & g) { return dst(g) == target; }));
                        });
                        value("cor3.5-petersen-unique-domatic", { 10 }, 1, [&] {
                            auto target = metrics(p).domatic;
                            return int(std::count_if(classes.begin(), classes.end(), [&] (const Graph & g) { return metrics(g).domatic == target; }));
                        });
                    }
                }

                /// One aggregate entry per bound over every graph measured so far.
                auto corpus_bound(string id, const std::function<bool (const GraphMetrics &)> & applies,
                        const std::function<bool (const GraphMetrics &)> & holds) -> void
                {
                    int checked = 0, violations = 0, skipped = 0;
                    string first;
                    for (auto & [key, m] : _corpus) {
                        if (! m) {
                            ++skipped;
                            continue;
                        }
                        if (! applies(*m))
                            continue;
                        ++checked;
                        if (! holds(*m) && 0 == violations++)
                            first = key;
                    }

                    ClaimResult result;
                    result.id = std::move(id);
                    result.params = { checked };
                    result.expected = violations_text(0, "");
                    result.computed = violations_text(violations, first);
                    if (skipped > 0)
                        result.computed += "; " + std::to_string(skipped) + " graphs over budget";
                    result.status = violations == 0 ? ClaimStatus::pass : ClaimStatus::fail;
                    _results.push_back(std::move(result));
                }

                auto bounds() -> void
                {
                    auto always = [] (const GraphMetrics &) { return true; };

                    corpus_bound("thm2.1-pendant",
                            [] (const GraphMetrics & m) { return m.min_degree == 1; },
                            [] (const GraphMetrics & m) { return m.dst == 1 || m.dst == 2; });
                    corpus_bound("thm2.2-max-degree-count", always,
                            [] (const GraphMetrics & m) { return 1 <= m.dst && m.dst <= m.max_degree_count; });
                    corpus_bound("thm2.4-min-degree", always,
                            [] (const GraphMetrics & m) { return m.dst <= m.domatic && m.domatic <= m.min_degree + 1; });
                    corpus_bound("cor2.5-regular",
                            [] (const GraphMetrics & m) { return m.regular; },
                            [] (const GraphMetrics & m) { return m.domatic == m.dst && m.dst <= m.max_degree + 1; });
                    corpus_bound("bound-dst-gamma-st-product", always,
                            [] (const GraphMetrics & m) { return m.dst * m.gamma_st <= m.order; });
                    corpus_bound("bound-gamma-gamma-st", always,
                            [] (const GraphMetrics & m) { return m.gamma <= m.gamma_st; });
                    corpus_bound("intro-weak-strong-inequality",
                            [] (const GraphMetrics & m) { return m.connected && m.order >= 3; },
                            weak_strong_inequality_holds);
                }

            public:
                explicit Registry(const ClaimOptions & options) :
                    _options(options)
                {
                    _solver.node_budget = options.node_budget;
                }

                auto run() -> vector<ClaimResult>
                {
                    families();
                    coronas();
                    cubic_catalogs();
                    bounds();
                    return std::move(_results);
                }
        };
    }

    auto run_claims(const ClaimOptions & options) -> vector<ClaimResult>
    {
        if (options.max_n < 6 || options.max_n > graph6_max_order)
            throw std::invalid_argument("claim size ceiling must be in 6.." + std::to_string(graph6_max_order)
                    + ", got " + std::to_string(options.max_n));
        return Registry(options).run();
    }
}
