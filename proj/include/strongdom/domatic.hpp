#pragma once

#include <strongdom/domination.hpp>
#include <strongdom/graph.hpp>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

namespace strongdom
{
    /// An ordered list of vertex classes. Well-formedness (disjoint, covering,
    /// no empty class) is checked by validate_partition, not on construction,
    /// so that malformed input can be reported distinctly from "not domatic".
    struct Partition
    {
        int order = 0;
        std::vector<VertexSet> classes;

        auto size() const -> int { return int(classes.size()); }
    };

    class InvalidPartition : public std::invalid_argument
    {
        public:
            using std::invalid_argument::invalid_argument;
    };

    /// Throws InvalidPartition unless p is a partition of g's vertex set
    /// into non-empty classes.
    auto validate_partition(const Graph & g, const Partition & p) -> void;

    /// True iff every class is a strong dominating set. Throws InvalidPartition
    /// for malformed p.
    auto is_strong_domatic_partition(const Graph & g, const Partition & p) -> bool;

    /// The rainbow formulation: every N_st[x] meets every class.
    auto every_strong_neighborhood_meets_every_class(const Graph & g, const Partition & p) -> bool;

    auto is_domatic_partition(const Graph & g, const Partition & p) -> bool;

    /// Upper bounds on d_st. Every strong domatic partition puts a distinct
    /// class inside each N_st[x], so |N_st[x]| bounds d_st for every x; the
    /// m bound and the delta + 1 bound both follow from it.
    struct DstBounds
    {
        int max_degree_count = 0;
        int min_degree_plus_one = 0;
        int min_strong_neighborhood = 0;
        std::optional<int> order_over_gamma_st;

        auto upper() const -> int;
    };

    auto dst_bounds(const Graph & g, std::optional<int> gamma_st = std::nullopt) -> DstBounds;

    /// min over x of |N_st[x]|. Throws std::invalid_argument for order 0.
    auto dst_upper_bound(const Graph & g) -> int;

    inline constexpr std::uint64_t default_node_budget = 100'000'000;

    struct SolverOptions
    {
        std::uint64_t node_budget = default_node_budget;

        /// Also cap the search at floor(n / gamma_st).
        bool use_gamma_cap = true;
    };

    class BudgetExceeded : public std::runtime_error
    {
        private:
            std::uint64_t _nodes;

        public:
            explicit BudgetExceeded(std::uint64_t nodes);

            auto nodes() const -> std::uint64_t { return _nodes; }
    };

    struct DstResult
    {
        int value = 0;
        Partition witness;
        DstBounds bounds_used;
        std::uint64_t nodes = 0;
    };

    /// Exact strong domatic number with a witness partition.
    ///
    /// Tries k = U, U-1, ... where U comes from dst_bounds, and stops at the
    /// first k for which the vertices admit a k-coloring in which every
    /// N_st[x] sees all k colors. Throws BudgetExceeded when the search
    /// visits more than options.node_budget assignments, and
    /// std::invalid_argument for order 0.
    auto strong_domatic_number(const Graph & g, const SolverOptions & options = {}) -> DstResult;

    struct DomaticResult
    {
        int value = 0;
        Partition witness;
        std::uint64_t nodes = 0;
    };

    /// Classic domatic number, same engine over closed neighborhoods.
    auto domatic_partition(const Graph & g, const SolverOptions & options = {}) -> DomaticResult;

    auto domatic_number(const Graph & g, const SolverOptions & options = {}) -> int;

    /// Feasibility of a k-class partition in which every set in `sets` meets
    /// every class. Returns the witness coloring (one class index per vertex)
    /// or nullopt. `nodes` accumulates visited assignments across calls.
    auto rainbow_coloring(int order, const std::vector<VertexSet> & sets, int k,
            std::uint64_t node_budget, std::uint64_t & nodes) -> std::optional<std::vector<int>>;
}
