#include <gtest/gtest.h>

#include <random>
#include <stdexcept>

#include "tcmotion/tc.hpp"
#include "tcmotion/tree_planner.hpp"
#include "tcmotion/verification.hpp"

using namespace tcmotion;

TEST(TcEuclid, GoldenValues) {
    EXPECT_EQ(tc_euclid_config(3, 2).value, 3);
    EXPECT_EQ(tc_euclid_config(2, 2).value, 2);
    EXPECT_EQ(tc_euclid_config(2, 5).value, 8);
    EXPECT_THROW(tc_euclid_config(1, 3), std::invalid_argument);
    EXPECT_THROW(tc_euclid_config(3, 1), std::invalid_argument);
}

TEST(TcTree, GoldenValues) {
    EXPECT_EQ(tc_tree_config(make_y_tree(), 2).value, 2);
    EXPECT_EQ(tc_tree_config(make_h_tree(), 4).value, 5);
    const auto unknown = tc_tree_config(make_h_tree(), 3);
    EXPECT_FALSE(unknown.known());
    EXPECT_EQ(unknown.upper_bound, 5);
    EXPECT_THROW(tc_tree_config(Tree({0, 1, 2}, {{0, 1}, {1, 2}}, 0), 2), std::invalid_argument);
}

TEST(TcTree, YDetectionIgnoresSubdivision) {
    const Tree subdivided({0, 1, 2, 3, 4, 5}, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {2, 5}}, 0);
    EXPECT_TRUE(is_y_shaped(subdivided));
    EXPECT_FALSE(is_y_shaped(make_star_tree(4)));
    EXPECT_FALSE(is_y_shaped(make_h_tree()));
    EXPECT_EQ(tc_tree_config(make_star_tree(4), 2).value, 3);
}

TEST(TcTree, MatchesPlannerRegionCountAboveThreshold) {
    for (const Tree& t : {make_h_tree(), make_star_tree(4)}) {
        const TreePlanner p(t);
        const int regions = p.max_region().k - p.min_region().k + 1;
        for (int n = 2 * t.essential_count(); n <= 2 * t.essential_count() + 2; ++n)
            if (!(n == 2 && is_y_shaped(t))) EXPECT_EQ(tc_tree_config(t, n).value, regions);
    }
    // Y with two particles: the planner's 3 regions exceed TC = 2.
    EXPECT_EQ(TreePlanner(make_y_tree()).max_region().k + 1, 3);
}

TEST(TcSphereProduct, GoldenValues) {
    EXPECT_EQ(tc_sphere_product(1, 1).value, 2);
    EXPECT_EQ(tc_sphere_product(2, 1).value, 3);
    EXPECT_EQ(tc_sphere_product(2, 3).value, 7);
    EXPECT_EQ(tc_sphere_product(3, 4).value, 5);
}

TEST(TcHigher, GoldenValuesAndAgreement) {
    EXPECT_EQ(tc_s_euclid(2, 3, 4).value, 7);
    EXPECT_EQ(tc_s_euclid(3, 2, 2).value, 3);
    EXPECT_EQ(tc_s_euclid(3, 3, 2).value, 4);
    for (int d = 2; d <= 7; ++d)
        for (int n = 2; n <= 8; ++n) EXPECT_EQ(tc_s_euclid(2, d, n).value, tc_euclid_config(d, n).value);
}

TEST(TcSurface, Table) {
    EXPECT_EQ(tc_surface(0, true).value, 3);
    EXPECT_EQ(tc_surface(1, true).value, 3);
    EXPECT_EQ(tc_surface(2, true).value, 5);
    EXPECT_EQ(tc_surface(1, false).value, 4);
    EXPECT_EQ(tc_surface(7, false).value, 5);
    EXPECT_THROW(tc_surface(-1, true), std::invalid_argument);
    EXPECT_THROW(tc_surface(0, false), std::invalid_argument);
}

TEST(ControlStrategies, Counts) {
    EXPECT_EQ(control_strategy_counts(2, 3), (std::pair<long long, long long>{8, 4}));
    EXPECT_EQ(control_strategy_counts(2, 1), (std::pair<long long, long long>{2, 2}));
    EXPECT_EQ(control_strategy_counts(3, 2), (std::pair<long long, long long>{9, 5}));
}

TEST(SphereProductEmbed, Examples) {
    EXPECT_EQ(sphere_product_embed({{1, 0}}).coords(), (std::vector<double>{0, 0, 1, 0}));
    EXPECT_EQ(sphere_product_embed({{1, 0}, {1, 0}}).coords(), (std::vector<double>{0, 0, 1, 0, 4, 0}));
    EXPECT_THROW(sphere_product_embed({{2, 0}}), std::invalid_argument);
}

TEST(SphereProductRetract, Examples) {
    const Configuration c(2, std::vector<Vector>{{0, 0}, {1, 0}, {4, 0}});
    EXPECT_EQ(sphere_product_retract(c), (std::vector<Vector>{{1, 0}, {1, 0}}));
    const Configuration r(2, std::vector<Vector>{{4, 0}, {1, 0}, {0, 0}});
    EXPECT_EQ(sphere_product_retract(r), (std::vector<Vector>{{-1, 0}, {-1, 0}}));
}

TEST(SphereProductRetract, InvertsEmbedding) {
    std::mt19937_64 rng(41);
    for (int d : {2, 3, 5})
        for (int k = 1; k <= 6; ++k)
            for (int trial = 0; trial < 20; ++trial) {
                std::vector<Vector> u;
                for (int i = 0; i < k; ++i) u.push_back(random_unit_vector(d, rng));
                const auto c = sphere_product_embed(u);
                EXPECT_TRUE(c.is_valid());
                const auto back = sphere_product_retract(c);
                for (int i = 0; i < k; ++i)
                    for (int m = 0; m < d; ++m) EXPECT_NEAR(back[i][m], u[i][m], 1e-12);
            }
}
