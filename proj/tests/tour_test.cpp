#include "support.hpp"

#include <gtest/gtest.h>

using fss::CanonicalKey;
using fss::Edge;

TEST(Edges, Triangle) {
    std::vector<int> order{0, 1, 2};
    EXPECT_EQ(fss::edges_of(order), (std::vector<Edge>{{0, 1}, {0, 2}, {1, 2}}));
}

TEST(Edges, ReversalGivesSameSet) {
    std::vector<int> a{0, 1, 2, 3}, b{0, 3, 2, 1};
    EXPECT_EQ(fss::edges_of(a), fss::edges_of(b));
}

TEST(Edges, SizeAndDegree) {
    std::mt19937_64 gen(1);
    for (int trial = 0; trial < 1000; ++trial) {
        std::size_t n = 3 + static_cast<std::size_t>(trial % 50);
        auto order = test::random_order(n, gen);
        auto edges = fss::edges_of(order);
        ASSERT_EQ(edges.size(), n);
        std::vector<int> degree(n, 0);
        for (const auto& e : edges) {
            ASSERT_LT(e.u, e.v);
            ++degree[static_cast<std::size_t>(e.u)];
            ++degree[static_cast<std::size_t>(e.v)];
        }
        for (int d : degree)
            ASSERT_EQ(d, 2);
        ASSERT_EQ(std::adjacent_find(edges.begin(), edges.end()), edges.end());
    }
}

TEST(MakeEdge, Normalizes) {
    EXPECT_EQ(fss::make_edge(5, 2), (Edge{2, 5}));
    EXPECT_EQ(fss::make_edge(2, 5), (Edge{2, 5}));
}

TEST(CanonicalKey, Examples) {
    std::vector<int> base{0, 1, 2, 3}, rot{1, 2, 3, 0}, other{0, 2, 1, 3}, rev{3, 2, 1, 0};
    EXPECT_EQ(CanonicalKey(base), CanonicalKey(rot));
    EXPECT_NE(CanonicalKey(base), CanonicalKey(other));
    EXPECT_EQ(CanonicalKey(base), CanonicalKey(rev));
    EXPECT_EQ(CanonicalKey(base).nodes(), base);
}

TEST(CanonicalKey, EqualExactlyWhenEdgeSetsAreEqual) {
    std::mt19937_64 gen(2);
    for (int trial = 0; trial < 20000; ++trial) {
        std::size_t n = 3 + static_cast<std::size_t>(trial % 4); // small n so collisions happen
        auto a = test::random_order(n, gen);
        auto b = test::random_order(n, gen);
        ASSERT_EQ(CanonicalKey(a) == CanonicalKey(b), test::edge_set(a) == test::edge_set(b));
    }
    for (int trial = 0; trial < 1000; ++trial) {
        std::size_t n = 3 + static_cast<std::size_t>(trial % 10);
        auto a = test::random_order(n, gen);
        auto b = a;
        std::rotate(b.begin(), b.begin() + static_cast<std::ptrdiff_t>(gen() % n), b.end());
        if (gen() % 2)
            std::reverse(b.begin(), b.end());
        ASSERT_EQ(CanonicalKey(a), CanonicalKey(b));
        ASSERT_EQ(CanonicalKey(a).hash(), CanonicalKey(b).hash());
    }
}

TEST(Tour, ValidatesAndCachesLength) {
    std::mt19937_64 gen(3);
    auto raw = test::random_raw(12, gen);
    fss::Instance inst(raw);
    auto order = test::random_order(12, gen);
    fss::Tour t(inst, order);
    EXPECT_EQ(t.length(), test::oracle_length(raw, order));
    EXPECT_EQ(t.size(), 12u);
    order[0] = order[1];
    EXPECT_THROW(fss::Tour(inst, order), fss::InvalidTourError);
}

TEST(TourAdjacency, MatchesEdgeSet) {
    std::mt19937_64 gen(4);
    for (int trial = 0; trial < 200; ++trial) {
        std::size_t n = 3 + static_cast<std::size_t>(trial % 20);
        auto order = test::random_order(n, gen);
        fss::TourAdjacency adj(order);
        auto edges = test::edge_set(order);
        for (int u = 0; u < static_cast<int>(n); ++u)
            for (int v = u + 1; v < static_cast<int>(n); ++v)
                ASSERT_EQ(adj.contains({u, v}), edges.contains({u, v}));
        for (std::size_t i = 0; i < n; ++i)
            ASSERT_EQ(adj.next(order[i]), order[(i + 1) % n]);
    }
}
