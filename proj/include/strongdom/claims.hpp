#pragma once

#include <strongdom/domatic.hpp>
#include <strongdom/graph.hpp>

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace strongdom
{
    enum class ClaimStatus
    {
        pass,
        fail,
        skipped_budget
    };

    auto status_name(ClaimStatus status) -> std::string_view;

    /// Outcome of checking one claim instance.
    ///
    /// `expected` and `computed` are rendered as text so that value claims
    /// ("3"), multiset claims ("[2,2,3,4,4,4]") and range claims ("1..2")
    /// share one column. An informational entry reports a comparison that the
    /// registry does not treat as a defect when it fails.
    struct ClaimResult
    {
        std::string id;
        std::vector<std::int64_t> params;
        std::string expected;
        std::string computed;
        ClaimStatus status = ClaimStatus::pass;
        std::int64_t ms = 0;
        bool informational = false;
    };

    inline constexpr std::uint64_t default_seed = 20240611;

    struct ClaimOptions
    {
        int max_n = 12;
        std::uint64_t seed = default_seed;
        std::uint64_t node_budget = default_node_budget;
    };

    /// Evaluates the whole registry. Instances with more than max_n vertices
    /// are left out. Throws std::invalid_argument unless 6 <= max_n <= 62.
    auto run_claims(const ClaimOptions & options) -> std::vector<ClaimResult>;

    /// Number of non-informational failures.
    auto count_failures(const std::vector<ClaimResult> & results) -> int;

    /// Per-graph invariants used by the structural bound checks.
    struct GraphMetrics
    {
        int order = 0;
        int min_degree = 0;
        int max_degree = 0;
        int max_degree_count = 0;
        bool connected = false;
        bool regular = false;
        int dst = 0;
        int domatic = 0;
        int gamma = 0;
        int gamma_st = 0;
        int gamma_w = 0;
    };

    auto measure(const Graph & g, const SolverOptions & options = {}) -> GraphMetrics;

    /// Names of the structural bounds violated by m; empty when all hold.
    /// Covers d_st <= m, d_st <= d <= delta + 1, d_st * gamma_st <= n,
    /// gamma <= gamma_st, gamma <= gamma_w, delta = 1 => d_st in {1, 2},
    /// regular => d = d_st.
    auto bound_violations(const GraphMetrics & m) -> std::vector<std::string>;

    /// gamma_w + 3 / (Delta + 1) * gamma_st <= n, in integer arithmetic.
    auto weak_strong_inequality_holds(const GraphMetrics & m) -> bool;

    /// Host of order uniform in [1, max_host] and guest of order uniform in
    /// [1, max_guest], each G(n, 1/2).
    auto random_corona_pair(std::mt19937_64 & rng, int max_host = 5, int max_guest = 3) -> std::pair<Graph, Graph>;
}
