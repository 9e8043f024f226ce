#pragma once

#include <strongdom/graph.hpp>

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

namespace strongdom
{
    enum class FamilyKind
    {
        path,
        cycle,
        complete,
        complete_bipartite,
        star,
        empty,
        friendship,
        book,
        petersen
    };

    /// A named parametric family member, e.g. {cycle, {9}} or {complete_bipartite, {2, 3}}.
    struct FamilySpec
    {
        FamilyKind kind;
        std::vector<int> params;
    };

    auto family_name(FamilyKind kind) -> std::string_view;
    auto parse_family_kind(std::string_view name) -> std::optional<FamilyKind>;

    /// Number of integer parameters a family takes.
    auto family_arity(FamilyKind kind) -> int;

    /// Builds a family member. Throws std::invalid_argument on an arity
    /// mismatch or a size constraint violation.
    auto basic_family(const FamilySpec & spec) -> Graph;

    /// Path 0-1-...-(n-1), n >= 1.
    auto path(int n) -> Graph;

    /// Path plus the edge (n-1, 0), n >= 3.
    auto cycle(int n) -> Graph;

    auto complete(int n) -> Graph;

    /// Parts {0..a-1} and {a..a+b-1}.
    auto complete_bipartite(int a, int b) -> Graph;

    /// K_{1,n}, center 0.
    auto star(int n) -> Graph;

    auto empty(int n) -> Graph;

    /// n triangles sharing hub 0; triangle i uses vertices 2i-1 and 2i.
    auto friendship(int n) -> Graph;

    /// Stacked-square book: spine edge {0,1}; page i has a_i = 2i adjacent
    /// to 0 and b_i = 2i+1 adjacent to 1, with a_i ~ b_i.
    auto book(int n) -> Graph;

    /// Outer cycle 0..4, spokes i ~ i+5, inner pentagram 5-7-9-6-8-5.
    auto petersen() -> Graph;

    /// Corona g o h: g on 0..n-1, then copy i of h on n+i*m .. n+(i+1)*m-1,
    /// each vertex of which is joined to vertex i. Throws if g has no vertices.
    auto corona(const Graph & g, const Graph & h) -> Graph;

    /// Block-diagonal union, h shifted by g.order().
    auto disjoint_union(const Graph & g, const Graph & h) -> Graph;

    /// G(n, p) with p = permille / 1000. Uses raw engine output only (no
    /// std:: distributions), so a seed gives the same graph on every platform.
    auto random_graph(int n, int permille, std::mt19937_64 & rng) -> Graph;

    /// Uniform in [lo, hi], from raw engine output.
    auto uniform_int(std::mt19937_64 & rng, int lo, int hi) -> int;

    /// count graphs seeded by seed: order uniform in [1, largest], edge
    /// probability uniform in [0, 1000] permille.
    auto random_corpus(std::uint64_t seed, int count, int largest) -> std::vector<Graph>;
}
