#include "support/support.hpp"

#include <strongdom/canonical.hpp>
#include <strongdom/families.hpp>

#include <gtest/gtest.h>

#include <algorithm>

using namespace strongdom;

namespace
{
    auto sorted_degrees(const Graph & g) -> std::vector<int>
    {
        auto d = g.degree_sequence();
        std::sort(d.begin(), d.end(), std::greater<>());
        return d;
    }

    auto count_degree(const Graph & g, int k) -> int
    {
        auto d = g.degree_sequence();
        return int(std::count(d.begin(), d.end(), k));
    }
}

TEST(Families, CycleThreeIsTriangle)
{
    EXPECT_TRUE(are_isomorphic(cycle(3), complete(3)));
}

TEST(Families, CompleteBipartiteTwoThree)
{
    auto g = complete_bipartite(2, 3);
    EXPECT_EQ(g.edge_count(), 6);
    EXPECT_EQ(g.degree_sequence(), (std::vector<int>{ 3, 3, 2, 2, 2 }));
}

TEST(Families, StarHasOneMaximumDegreeVertex)
{
    auto g = star(5);
    EXPECT_EQ(g.order(), 6);
    EXPECT_EQ(g.max_degree_count(), 1);
}

TEST(Families, FriendshipOneIsTriangle)
{
    EXPECT_TRUE(are_isomorphic(friendship(1), complete(3)));
}

TEST(Families, FriendshipThree)
{
    auto g = friendship(3);
    EXPECT_EQ(g.degree(0), 6);
    for (Vertex v = 1 ; v < g.order() ; ++v)
        EXPECT_EQ(g.degree(v), 2);
}

TEST(Families, FriendshipTwo)
{
    auto g = friendship(2);
    EXPECT_EQ(g.order(), 5);
    EXPECT_EQ(g.edge_count(), 6);
}

TEST(Families, BookOneIsFourCycle)
{
    EXPECT_TRUE(are_isomorphic(book(1), cycle(4)));
}

TEST(Families, BookThree)
{
    auto g = book(3);
    EXPECT_EQ(g.order(), 8);
    EXPECT_EQ(g.edge_count(), 10);
    EXPECT_EQ(count_degree(g, 4), 2);
}

TEST(Families, BookTwo)
{
    EXPECT_EQ(sorted_degrees(book(2)), (std::vector<int>{ 3, 3, 2, 2, 2, 2 }));
}

TEST(Families, FriendshipAndBookShapes)
{
    for (int n = 2 ; n <= 8 ; ++n) {
        EXPECT_EQ(friendship(n).order(), 2 * n + 1);
        EXPECT_EQ(count_degree(friendship(n), 2 * n), 1);
        EXPECT_EQ(book(n).order(), 2 * n + 2);
        EXPECT_EQ(count_degree(book(n), n + 1), 2);
    }
}

TEST(Families, CoronaPathTwoWithPendantsIsPathFour)
{
    EXPECT_TRUE(are_isomorphic(corona(path(2), complete(1)), path(4)));
}

TEST(Families, CoronaPathLayout)
{
    for (int n = 2 ; n <= 8 ; ++n) {
        auto g = corona(path(n), complete(1));
        for (Vertex v = 0 ; v < n ; ++v) {
            EXPECT_TRUE(g.degree(v) == 2 || g.degree(v) == 3);
            EXPECT_TRUE(g.adjacent(v, n + v));
            EXPECT_EQ(g.degree(n + v), 1);
        }
    }
}

TEST(Families, CoronaTriangleWithTwoIsolatedGuests)
{
    auto g = corona(complete(3), empty(2));
    EXPECT_EQ(g.order(), 9);
    EXPECT_EQ(g.edge_count(), 3 + 6);
}

TEST(Families, CoronaCounts)
{
    for (auto & g : support::sample_graphs(4))
        for (auto & h : support::sample_graphs(3, 5, 4)) {
            auto c = corona(g, h);
            int n = g.order(), m = h.order();
            EXPECT_EQ(c.order(), n * (1 + m));
            EXPECT_EQ(c.edge_count(), g.edge_count() + n * h.edge_count() + n * m);
        }
}

TEST(Families, CoronaWithEmptyGuestAndEmptyHost)
{
    EXPECT_EQ(corona(cycle(4), Graph{}), cycle(4));
    EXPECT_THROW(corona(Graph{}, complete(2)), std::invalid_argument);
}

TEST(Families, UnionOfTwoK4IsCubic)
{
    auto g = disjoint_union(complete(4), complete(4));
    EXPECT_EQ(g.order(), 8);
    EXPECT_TRUE(g.is_regular());
    EXPECT_EQ(g.max_degree(), 3);
}

TEST(Families, UnionWithEmptyIsIdentity)
{
    EXPECT_EQ(disjoint_union(empty(0), petersen()), petersen());
}

TEST(Families, UnionOfCherriesIsCoronaOfEmptyGraphs)
{
    EXPECT_TRUE(are_isomorphic(disjoint_union(star(2), star(2)), corona(empty(2), empty(2))));
}

TEST(Families, Petersen)
{
    auto g = petersen();
    EXPECT_EQ(g.edge_count(), 15);
    EXPECT_TRUE(g.is_regular());
    EXPECT_EQ(g.max_degree(), 3);
    EXPECT_EQ(support::girth(g), 5);
    EXPECT_EQ(g.neighbors(1), VertexSet(10, { 0, 2, 6 }));
}

TEST(Families, PetersenVertexDeletedSubgraphsAreIsomorphic)
{
    auto g = petersen();
    auto first = canonical_form(g.induced(VertexSet::full(10).without(0)));
    for (Vertex v = 1 ; v < 10 ; ++v)
        EXPECT_EQ(canonical_form(g.induced(VertexSet::full(10).without(v))), first);
}

TEST(Families, SizeConstraints)
{
    EXPECT_THROW(path(0), std::invalid_argument);
    EXPECT_THROW(cycle(2), std::invalid_argument);
    EXPECT_THROW(complete_bipartite(0, 3), std::invalid_argument);
    EXPECT_THROW(friendship(0), std::invalid_argument);
    EXPECT_THROW(book(0), std::invalid_argument);
    EXPECT_THROW(complete(65), std::invalid_argument);
}

TEST(Families, SpecDispatchChecksArity)
{
    EXPECT_EQ(basic_family({ FamilyKind::cycle, { 5 } }), cycle(5));
    EXPECT_EQ(basic_family({ FamilyKind::complete_bipartite, { 2, 3 } }), complete_bipartite(2, 3));
    EXPECT_EQ(basic_family({ FamilyKind::petersen, {} }), petersen());
    EXPECT_THROW(basic_family({ FamilyKind::cycle, {} }), std::invalid_argument);
    EXPECT_THROW(basic_family({ FamilyKind::petersen, { 1 } }), std::invalid_argument);
}

TEST(Families, NamesRoundTrip)
{
    for (auto kind : { FamilyKind::path, FamilyKind::cycle, FamilyKind::complete, FamilyKind::complete_bipartite,
            FamilyKind::star, FamilyKind::empty, FamilyKind::friendship, FamilyKind::book, FamilyKind::petersen })
        EXPECT_EQ(parse_family_kind(family_name(kind)), kind);
    EXPECT_FALSE(parse_family_kind("wheel"));
}

TEST(Families, RandomGraphIsSeedDeterministic)
{
    std::mt19937_64 a(99), b(99);
    EXPECT_EQ(random_graph(12, 400, a), random_graph(12, 400, b));
    EXPECT_EQ(random_corpus(5, 20, 8), random_corpus(5, 20, 8));
    std::mt19937_64 c(1);
    EXPECT_EQ(random_graph(6, 0, c).edge_count(), 0);
    EXPECT_EQ(random_graph(6, 1000, c).edge_count(), 15);
}
