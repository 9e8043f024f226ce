#include "support/support.hpp"

#include <strongdom/domination.hpp>
#include <strongdom/families.hpp>
#include <strongdom/oracle.hpp>

#include <gtest/gtest.h>

#include <algorithm>

using namespace strongdom;

TEST(StrongNeighborhood, PendantVertexInPath)
{
    auto n = strong_closed_neighborhood(path(4), 0);
    EXPECT_EQ(n.vertex, 0);
    EXPECT_EQ(n.members, VertexSet(4, { 0, 1 }));
}

TEST(StrongNeighborhood, StarCenterIsAlone)
{
    EXPECT_EQ(strong_closed_neighborhood(star(5), 0).members, VertexSet(6, { 0 }));
}

TEST(StrongNeighborhood, RegularGraphGivesClosedNeighborhood)
{
    auto g = petersen();
    for (Vertex x = 0 ; x < 10 ; ++x)
        EXPECT_EQ(strong_closed_neighborhood(g, x).members, g.closed_neighborhood(x));
}

TEST(StrongNeighborhood, IsolatedVertexIsAlone)
{
    auto g = disjoint_union(complete(1), path(2));
    EXPECT_EQ(strong_closed_neighborhood(g, 0).members, VertexSet(3, { 0 }));
    EXPECT_EQ(weak_closed_neighborhood(g, 0), VertexSet(3, { 0 }));
}

TEST(StrongNeighborhoodProperty, MembersSatisfyDefinition)
{
    for (auto & g : support::sample_graphs(10))
        for (Vertex x = 0 ; x < g.order() ; ++x) {
            auto s = strong_closed_neighborhood(g, x).members;
            EXPECT_TRUE(s.contains(x));
            for (Vertex y = 0 ; y < g.order() ; ++y)
                if (y != x) {
                    EXPECT_EQ(s.contains(y), g.adjacent(x, y) && g.degree(y) >= g.degree(x));
                }
        }
}

TEST(Dominating, WholeAndEmptySets)
{
    auto g = cycle(5);
    EXPECT_TRUE(is_dominating_set(g, VertexSet::full(5)));
    EXPECT_FALSE(is_dominating_set(g, VertexSet(5)));
}

TEST(Dominating, AntipodalPairInSixCycle)
{
    EXPECT_TRUE(is_dominating_set(cycle(6), VertexSet(6, { 0, 3 })));
}

TEST(Dominating, OrderMismatchIsRejected)
{
    EXPECT_THROW(is_dominating_set(cycle(6), VertexSet(5)), std::invalid_argument);
    EXPECT_THROW(is_strong_dominating_set(cycle(6), VertexSet(5)), std::invalid_argument);
    EXPECT_THROW(is_weak_dominating_set(cycle(6), VertexSet(5)), std::invalid_argument);
}

TEST(StrongDominating, PetersenOuterCycle)
{
    EXPECT_TRUE(is_strong_dominating_set(petersen(), VertexSet(10, { 0, 1, 2, 3, 4 })));
}

TEST(StrongDominating, AnySingleVertexOfCompleteGraph)
{
    for (int n = 1 ; n <= 7 ; ++n)
        for (Vertex v = 0 ; v < n ; ++v)
            EXPECT_TRUE(is_strong_dominating_set(complete(n), VertexSet(n, { v })));
}

TEST(StrongDominating, StarLeavesMissCenter)
{
    EXPECT_FALSE(is_strong_dominating_set(star(3), VertexSet(4, { 1, 2, 3 })));
}

TEST(WeakDominating, StarLeavesCoverCenter)
{
    EXPECT_TRUE(is_weak_dominating_set(star(3), VertexSet(4, { 1, 2, 3 })));
    EXPECT_FALSE(is_weak_dominating_set(star(3), VertexSet(4, { 0 })));
    EXPECT_TRUE(is_weak_dominating_set(star(3), VertexSet::full(4)));
}

TEST(DominatingProperty, RegularGraphsMakeAllKindsCoincide)
{
    std::vector<Graph> regular{ cycle(5), cycle(8), complete(5), complete_bipartite(3, 3),
        disjoint_union(complete(4), complete(4)), book(1) };
    for (auto & g : regular) {
        ASSERT_TRUE(g.is_regular());
        for (std::uint64_t bits = 0 ; bits < (std::uint64_t{1} << g.order()) ; ++bits) {
            VertexSet d(g.order(), bits);
            auto classic = is_dominating_set(g, d);
            EXPECT_EQ(is_strong_dominating_set(g, d), classic);
            EXPECT_EQ(is_weak_dominating_set(g, d), classic);
        }
    }
}

TEST(DominatingProperty, DefinitionMatchesNeighborhoodForm)
{
    for (auto & g : support::sample_graphs(8, 21, 40)) {
        for (std::uint64_t bits = 0 ; bits < (std::uint64_t{1} << g.order()) ; ++bits) {
            VertexSet d(g.order(), bits);
            EXPECT_EQ(is_strong_dominating_set(g, d), meets_every_strong_neighborhood(g, d));
        }
    }
}

TEST(DominatingProperty, SupersetClosure)
{
    std::mt19937_64 rng(8);
    for (auto & g : support::sample_graphs(9)) {
        for (int trial = 0 ; trial < 20 ; ++trial) {
            VertexSet d(g.order(), rng() & low_mask(g.order()));
            if (! is_strong_dominating_set(g, d))
                continue;
            VertexSet extra(g.order(), rng() & low_mask(g.order()));
            EXPECT_TRUE(is_strong_dominating_set(g, d | extra));
        }
    }
}

TEST(DominationNumber, CycleOfSeven)
{
    EXPECT_EQ(strong_domination_number(cycle(7)).size, 3);
}

TEST(DominationNumber, CompleteGraph)
{
    for (int n = 1 ; n <= 8 ; ++n)
        EXPECT_EQ(strong_domination_number(complete(n)).size, 1);
}

TEST(DominationNumber, PathOfFourWitness)
{
    auto g = path(4);
    auto result = strong_domination_number(g);
    EXPECT_EQ(result.size, 2);
    EXPECT_EQ(result.witness, VertexSet(4, { 0, 2 }));

    auto all = support::all_minimum_strong_dominating_sets(g);
    EXPECT_EQ(all, (std::vector<VertexSet>{ VertexSet(4, { 0, 2 }), VertexSet(4, { 1, 2 }), VertexSet(4, { 1, 3 }) }));
    EXPECT_TRUE(is_strong_dominating_set(g, VertexSet(4, { 1, 2 })));
}

TEST(DominationNumber, StarValues)
{
    auto g = star(4);
    EXPECT_EQ(domination_number(g), 1);
    EXPECT_EQ(strong_domination_number(g).size, 1);
    EXPECT_EQ(weak_domination_number(g), 4);
}

TEST(DominationNumber, IsolatedVerticesAlwaysChosen)
{
    auto g = disjoint_union(empty(2), cycle(3));
    auto result = strong_domination_number(g);
    EXPECT_EQ(result.size, 3);
    EXPECT_TRUE(result.witness.contains(0));
    EXPECT_TRUE(result.witness.contains(1));
    EXPECT_EQ(domination_number(g), 3);
    EXPECT_EQ(weak_domination_number(g), 3);
}

TEST(DominationNumber, EmptyGraphIsRejected)
{
    EXPECT_THROW(strong_domination_number(Graph{}), std::invalid_argument);
    EXPECT_THROW(minimum_dominating_set(Graph{}, DominationKind::classic), std::invalid_argument);
}

TEST(DominationNumberProperty, CycleFormula)
{
    for (int n = 3 ; n <= 20 ; ++n) {
        EXPECT_EQ(strong_domination_number(cycle(n)).size, (n + 2) / 3) << n;
        EXPECT_EQ(domination_number(cycle(n)), (n + 2) / 3) << n;
    }
}

TEST(DominationNumberProperty, WitnessIsLeastMinimumSet)
{
    for (auto & g : support::sample_graphs(8, 31, 60)) {
        auto result = strong_domination_number(g);
        auto all = support::all_minimum_strong_dominating_sets(g);
        ASSERT_FALSE(all.empty());
        EXPECT_EQ(result.size, all.front().size());
        EXPECT_EQ(result.witness, *std::min_element(all.begin(), all.end(), support::members_less));
    }
}

TEST(DominationNumberProperty, OrderingAndWitnessValidity)
{
    for (auto & g : support::sample_graphs(10)) {
        auto gamma = minimum_dominating_set(g, DominationKind::classic);
        auto strong = minimum_dominating_set(g, DominationKind::strong);
        auto weak = minimum_dominating_set(g, DominationKind::weak);
        EXPECT_TRUE(is_dominating_set(g, gamma.witness));
        EXPECT_TRUE(is_strong_dominating_set(g, strong.witness));
        EXPECT_TRUE(is_weak_dominating_set(g, weak.witness));
        EXPECT_EQ(gamma.witness.size(), gamma.size);
        EXPECT_LE(gamma.size, strong.size);
        EXPECT_LE(gamma.size, weak.size);
    }
}

TEST(DominationNumberProperty, WeakStrongInequalityOnConnectedGraphs)
{
    for (auto & g : support::sample_graphs(10)) {
        if (g.order() < 3 || ! g.is_connected())
            continue;
        int delta = g.max_degree();
        auto gamma_w = weak_domination_number(g), gamma_st = strong_domination_number(g).size;
        EXPECT_LE((delta + 1) * gamma_w + 3 * gamma_st, g.order() * (delta + 1)) << g.order();
    }
}
