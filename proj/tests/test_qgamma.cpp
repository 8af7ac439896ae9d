#include <gtest/gtest.h>

#include <queue>
#include <random>
#include <set>
#include <stdexcept>

#include "tcmotion/qgamma.hpp"

using namespace tcmotion;

namespace {

// Ascending edges at v found from scratch: an incident edge is ascending iff
// deleting it leaves v connected to the root.
std::vector<int> brute_ascending(const Tree& t, int v) {
    std::vector<int> out;
    for (int e : t.incident_edges(v)) {
        std::vector<bool> seen(t.num_vertices(), false);
        std::queue<int> q;
        q.push(v);
        seen[v] = true;
        while (!q.empty()) {
            const int x = q.front();
            q.pop();
            for (int f : t.incident_edges(x)) {
                if (f == e) continue;
                const int y = t.edge(f).lower == x ? t.edge(f).upper : t.edge(f).lower;
                if (!seen[y]) {
                    seen[y] = true;
                    q.push(y);
                }
            }
        }
        if (!seen[t.root()]) continue;  // e leads to the root
        out.push_back(e);
    }
    return out;
}

long long brute_edge_count(const Tree& t) {
    long long total = 0;
    for (int v = 0; v < t.num_vertices(); ++v) {
        if (v == t.root() || t.degree(v) < 3) continue;
        const auto up = brute_ascending(t, v);
        for (int e : up)
            for (int f : up)
                if (e != f) ++total;
    }
    return total;
}

Tree random_tree_with_essential(std::mt19937_64& rng, int max_vertices) {
    std::uniform_int_distribution<int> size(4, max_vertices);
    for (;;) {
        Tree t = random_tree(size(rng), rng);
        if (t.essential_count() > 0) return t;
    }
}

}  // namespace

TEST(AscendingDescending, Examples) {
    const Tree y = make_y_tree();
    const auto center = ascending_descending(y, y.index_of(1));
    EXPECT_EQ(center.ascending.size(), 2u);
    EXPECT_EQ(center.descending, y.root_edge());
    const Tree star = make_star_tree(4);
    EXPECT_EQ(ascending_descending(star, star.index_of(1)).ascending.size(), 3u);
    EXPECT_TRUE(ascending_descending(y, y.index_of(2)).ascending.empty());
    EXPECT_THROW(ascending_descending(y, y.root()), std::invalid_argument);
}

TEST(QGamma, Examples) {
    EXPECT_EQ(build_qgamma(make_y_tree()).num_edges(), 2);
    EXPECT_EQ(build_qgamma(make_star_tree(4)).num_edges(), 6);
    EXPECT_EQ(build_qgamma(make_h_tree()).num_edges(), 4);
    EXPECT_THROW(build_qgamma(Tree({0, 1, 2}, {{0, 1}, {1, 2}}, 0)), std::invalid_argument);
}

TEST(QGamma, Betti) {
    EXPECT_EQ(betti1_f2(make_y_tree()), 1);
    EXPECT_EQ(betti1_f2(make_star_tree(4)), 5);
    EXPECT_EQ(betti1_f2(make_h_tree()), 3);
    EXPECT_THROW(betti1_f2(Tree({0, 1}, {{0, 1}}, 0)), std::invalid_argument);
}

TEST(QGamma, YInvolutionSwapsTheTwoEdges) {
    const auto q = build_qgamma(make_y_tree());
    EXPECT_EQ(involution(q), (std::vector<int>{1, 0}));
}

TEST(QGamma, RandomTreesMatchBruteForce) {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 100; ++trial) {
        const Tree t = random_tree_with_essential(rng, 50);
        const auto q = build_qgamma(t);
        EXPECT_EQ(q.num_edges(), brute_edge_count(t));
        EXPECT_EQ(q.num_edges(), qgamma_edge_formula(t));
        EXPECT_EQ(q.num_edges() % 2, 0);
        EXPECT_EQ(betti1_f2(t), q.num_edges() - 2 + 1);

        const auto inv = involution(q);
        for (int i = 0; i < q.num_edges(); ++i) {
            EXPECT_NE(inv[i], i);
            EXPECT_EQ(inv[inv[i]], i);
            EXPECT_EQ(q.edges[inv[i]].first, q.edges[i].second);
        }
    }
}

TEST(QGamma, EdgeCountIndependentOfRoot) {
    std::mt19937_64 rng(32);
    for (int trial = 0; trial < 30; ++trial) {
        const Tree t = random_tree_with_essential(rng, 30);
        const int count = build_qgamma(t).num_edges();
        for (int v = 0; v < t.num_vertices(); ++v)
            if (t.degree(v) == 1) EXPECT_EQ(build_qgamma(reroot(t, v)).num_edges(), count);
    }
}

TEST(QGamma, MonotoneUnderSubtrees) {
    // Growing a tree by attaching leaves never removes Q_Gamma edges.
    std::mt19937_64 rng(33);
    for (int trial = 0; trial < 30; ++trial) {
        const Tree small = random_tree_with_essential(rng, 20);
        auto ids = small.ids();
        auto edges = small.edge_id_pairs();
        std::uniform_int_distribution<int> pick(1, static_cast<int>(ids.size()) - 1);
        for (int extra = 0; extra < 5; ++extra) {
            const int id = static_cast<int>(ids.size());
            edges.emplace_back(ids[pick(rng)], id);
            ids.push_back(id);
        }
        const Tree big(ids, edges, small.id_of(small.root()));
        EXPECT_LE(build_qgamma(small).num_edges(), build_qgamma(big).num_edges());
    }
}
