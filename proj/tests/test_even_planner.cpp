#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <stdexcept>

#include "tcmotion/even_planner.hpp"
#include "tcmotion/verification.hpp"

using namespace tcmotion;

namespace {

Configuration cfg(const std::vector<Vector>& pts) { return Configuration(static_cast<int>(pts.front().size()), pts); }

double grid_min_separation(const Trajectory& t, int samples) {
    double best = kInfinity;
    for (int k = 0; k < samples; ++k) best = std::min(best, min_separation(t.evaluate(k / double(samples - 1))));
    return best;
}

// Largest change of any pairwise distance along the trajectory.
double distance_drift(const Trajectory& t, int samples) {
    const auto c0 = t.evaluate(0.0);
    double worst = 0.0;
    for (int k = 0; k < samples; ++k) {
        const auto c = t.evaluate(k / double(samples - 1));
        for (int i = 0; i < c.size(); ++i)
            for (int j = i + 1; j < c.size(); ++j)
                worst = std::max(worst, std::abs(distance(c.point(i), c.point(j)) - distance(c0.point(i), c0.point(j))));
    }
    return worst;
}

// Maximum distance of any point from the line through z1 and z2.
double off_line(const Configuration& c) {
    const Vector e = direction(c);
    double worst = 0.0;
    for (int i = 0; i < c.size(); ++i) {
        Vector r(c.dim());
        for (int k = 0; k < c.dim(); ++k) r[k] = c.point(i)[k] - c.point(0)[k];
        const double along = dot(r, e);
        for (int k = 0; k < c.dim(); ++k) r[k] -= along * e[k];
        worst = std::max(worst, norm(r));
    }
    return worst;
}

}  // namespace

TEST(EvenPlanner, RequiresEvenDimension) {
    EXPECT_THROW(EvenPlanner(3, 2), std::invalid_argument);
    EXPECT_THROW(EvenPlanner(2, 1), std::invalid_argument);
    EXPECT_NO_THROW(EvenPlanner(4, 2));
}

TEST(Direction, Examples) {
    EXPECT_EQ(direction(cfg({{0, 0}, {2, 0}})), (Vector{1, 0}));
    EXPECT_EQ(direction(cfg({{1, 1}, {1, 4}})), (Vector{0, 1}));
    const auto d1 = direction(cfg({{0.3, 1}, {2, -4}}));
    const auto d2 = direction(cfg({{2, -4}, {0.3, 1}}));
    for (int k = 0; k < 2; ++k) EXPECT_DOUBLE_EQ(d1[k], -d2[k]);
}

TEST(EvenPlanner, CpDirlineExamples) {
    const EvenPlanner p2(2, 2), p3(2, 3);
    EXPECT_EQ(p2.cp_dirline(cfg({{0, 0}, {0.3, 5}})), 2);
    EXPECT_EQ(p3.cp_dirline(cfg({{0, 0}, {1, 1}, {3, 3}})), 3);
    // z3 projects onto z1 along L_C = x-axis.
    EXPECT_EQ(p3.cp_dirline(cfg({{0, 0}, {1, 0}, {0, 1}})), 2);
}

TEST(EvenPlanner, ClassifyExamples) {
    const EvenPlanner p(2, 2);
    EXPECT_EQ(p.classify(cfg({{0, 0}, {1, 0}}), cfg({{1, 0}, {0, 0}})).kind, PairClass::Kind::Antipodal);
    EXPECT_EQ(p.classify(cfg({{0, 0}, {1, 0}}), cfg({{5, 5}, {7, 5}})).kind, PairClass::Kind::Aligned);
    const auto c = p.classify(cfg({{0, 0}, {1, 0}}), cfg({{0, 0}, {0, 1}}));
    EXPECT_EQ(c, (PairClass{PairClass::Kind::Aligned, 2, 2}));
}

TEST(PerpField, PairingExamples) {
    EXPECT_EQ(perp_field(Vector{1, 0}), (Vector{0, 1}));
    EXPECT_EQ(perp_field(Vector{0, 1}), (Vector{-1, 0}));
    EXPECT_THROW(perp_field(Vector{1, 0, 0}), std::invalid_argument);
}

TEST(PerpField, OrthonormalAndLipschitz) {
    std::mt19937_64 rng(2);
    for (int trial = 0; trial < 200; ++trial) {
        const Vector u = random_unit_vector(4, rng);
        const Vector v = perp_field(u);
        EXPECT_NEAR(dot(u, v), 0.0, 1e-15);
        EXPECT_NEAR(norm(v), 1.0, 1e-15);
        Vector u2 = u;
        for (double& x : u2) x += 1e-6 / 2.0;
        const double moved = distance(u2, u);
        u2 = normalized(u2);
        EXPECT_LE(distance(perp_field(u2), v), 2.0 * moved);
    }
}

TEST(EvenPlanner, ColinearizeLandsOnOwnLine) {
    const EvenPlanner p(2, 3);
    const auto c = cfg({{0, 0}, {1, 0}, {0.5, 2}});
    const auto t = p.colinearize(c);
    const auto end = t.evaluate(1.0);
    EXPECT_LE(off_line(end), 1e-12);
    EXPECT_NEAR(distance(direction(end), direction(c)), 0.0, 1e-12);
    EXPECT_EQ(t.evaluate(0.0), c);
    EXPECT_GT(grid_min_separation(t, 500), 0.0);
}

TEST(EvenPlanner, ColinearizePairEndsShifted) {
    const EvenPlanner p(2, 2);
    const auto c = cfg({{0, 0}, {0, 2}});
    const auto end = p.colinearize(c).evaluate(1.0);
    EXPECT_EQ(end.point(0)[0], 0.0);
    EXPECT_EQ(end.point(0)[1], 0.0);
    // z2 moves along e_C by eps = gap / n = 1.
    EXPECT_NEAR(end.point(1)[1], 3.0, 1e-12);
}

TEST(EvenPlanner, RotateAlignQuarterTurn) {
    const EvenPlanner p(2, 2);
    const auto c = cfg({{1, 1}, {3, 1}});
    const auto t = p.rotate_align(c, Vector{0, 1});
    const auto end = t.evaluate(1.0);
    EXPECT_NEAR(end.point(0)[0], 1.0, 1e-12);
    EXPECT_NEAR(end.point(1)[0], 1.0, 1e-12);
    EXPECT_NEAR(end.point(1)[1], 3.0, 1e-12);
    EXPECT_LE(distance_drift(t, 200), 1e-12);
}

TEST(EvenPlanner, RotateAlignIdentityIsConstant) {
    const EvenPlanner p(2, 2);
    const auto c = cfg({{1, 1}, {3, 1}});
    EXPECT_EQ(p.rotate_align(c, Vector{1, 0}).evaluate(0.6), c);
}

TEST(EvenPlanner, RotateAlignRejectsAntipodalTarget) {
    const EvenPlanner p(2, 2);
    EXPECT_THROW(p.rotate_align(cfg({{0, 0}, {1, 0}}), Vector{-1, 0}), std::invalid_argument);
}

TEST(EvenPlanner, TranslateAlignExamples) {
    const EvenPlanner p(2, 2);
    const auto c = cfg({{0, 0}, {1, 0}});
    EXPECT_EQ(p.translate_align(c, Line{{5, 0}, {1, 0}}).evaluate(0.5), c);
    const auto end = p.translate_align(c, Line{{3, 1}, {-1, 0}}).evaluate(1.0);
    EXPECT_EQ(end.coords(), (std::vector<double>{0, 1, 1, 1}));
    EXPECT_THROW(p.translate_align(c, Line{{0, 0}, {0, 1}}), std::invalid_argument);
}

TEST(EvenPlanner, TranslationIsRigid) {
    const EvenPlanner p(4, 3);
    const auto c = cfg({{0, 0, 0, 0}, {1, 1, 0, 0}, {3, 3, 0, 0}});
    const auto t = p.translate_align(c, Line{{0, 0, 2, -1}, normalized(Vector{1, 1, 0, 0})});
    EXPECT_LE(distance_drift(t, 100), 1e-12);
}

TEST(EvenPlanner, LiftMoveDropEndpointsAndSeparation) {
    const EvenPlanner p(2, 3);
    const auto a = cfg({{0, 0}, {1, 0}, {2, 0}});
    const auto b = cfg({{2, 0}, {1, 0}, {0, 0}});
    const auto t = p.lift_move_drop(a, b, Vector{0, 1});
    EXPECT_EQ(t.evaluate(0.0), a);
    EXPECT_EQ(t.evaluate(1.0), b);
    EXPECT_GT(grid_min_separation(t, 1000), 0.0);
}

TEST(EvenPlanner, LiftMoveDropSwapClearance) {
    const EvenPlanner p(2, 2);
    const auto a = cfg({{0, 0}, {1, 0}});
    const auto b = cfg({{1, 0}, {0, 0}});
    const auto t = p.lift_move_drop(a, b, Vector{0, 1});
    // g = max(1, diam) / n = 1/2.
    EXPECT_GE(grid_min_separation(t, 1000), 0.5 - 1e-12);
}

TEST(EvenPlanner, LiftMoveDropRejectsNonCollinear) {
    const EvenPlanner p(2, 2);
    EXPECT_THROW(p.lift_move_drop(cfg({{0, 0}, {1, 0}}), cfg({{0, 1}, {1, 1}}), Vector{0, 1}), std::invalid_argument);
}

TEST(EvenPlanner, RegionExamples) {
    const EvenPlanner p2(2, 2), p3(2, 3);
    EXPECT_EQ(p2.region_index(cfg({{0, 0}, {1, 0}}), cfg({{1, 0}, {0, 0}})).k, 3);
    EXPECT_EQ(p3.region_index(cfg({{0, 0}, {1, 0}, {2, 1}}), cfg({{0, 0}, {0, 1}, {1, 3}})).k, 6);
    EXPECT_EQ(p3.region_index(cfg({{0, 0}, {1, 0}, {0, 1}}), cfg({{0, 0}, {0, 1}, {1, 3}})).k, 5);
}

TEST(EvenPlanner, SwapUsesAntipodalBranch) {
    const EvenPlanner p(2, 2);
    const auto a = cfg({{0, 0}, {1, 0}});
    const auto b = cfg({{1, 0}, {0, 0}});
    const auto r = p.plan(a, b);
    EXPECT_EQ(r.region.k, 3);
    EXPECT_LE(max_norm_distance(r.trajectory.evaluate(1.0), b), 1e-12);
    EXPECT_GT(grid_min_separation(r.trajectory, 1000), 1e-6);
}

TEST(EvenPlanner, QuarterTurnPair) {
    const EvenPlanner p(2, 2);
    const auto a = cfg({{0, 0}, {1, 0}});
    const auto b = cfg({{0, 0}, {0, 1}});
    const auto r = p.plan(a, b);
    EXPECT_EQ(r.region.k, 4);
    EXPECT_LE(max_norm_distance(r.trajectory.evaluate(1.0), b), 1e-12);
    EXPECT_GT(grid_min_separation(r.trajectory, 1000), 1e-6);
}

TEST(EvenPlanner, RoundTrip) {
    const EvenPlanner p(2, 3);
    const auto a = cfg({{0, 0}, {1, 0.5}, {-1, 2}});
    const auto r = p.plan(a, a);
    EXPECT_EQ(r.trajectory.evaluate(1.0), a);
    EXPECT_GT(grid_min_separation(r.trajectory, 1000), 1e-6);
}

TEST(EvenPlanner, RandomPairsBothBranches) {
    std::mt19937_64 rng(23);
    for (int d : {2, 4})
        for (int n = 2; n <= 4; ++n) {
            const EvenPlanner p(d, n);
            std::uniform_int_distribution<int> cp(2, n);
            for (int trial = 0; trial < 12; ++trial) {
                const Vector ea = random_unit_vector(d, rng);
                Vector eb = random_unit_vector(d, rng);
                if (trial % 3 == 0)
                    for (int k = 0; k < d; ++k) eb[k] = -ea[k];
                const auto a = random_configuration_with_dirline_cp(d, n, cp(rng), ea, rng);
                const auto b = random_configuration_with_dirline_cp(d, n, cp(rng), eb, rng);
                const auto cls = p.classify(a, b);
                EXPECT_EQ(cls.kind == PairClass::Kind::Antipodal, trial % 3 == 0);
                const auto r = p.plan(a, b);
                EXPECT_LE(max_norm_distance(r.trajectory.evaluate(0.0), a), 1e-12);
                EXPECT_LE(max_norm_distance(r.trajectory.evaluate(1.0), b), 1e-9);
                EXPECT_GE(grid_min_separation(r.trajectory, 400), 1e-6 * diameter({&a, &b}));
                EXPECT_EQ(r.region.k, cls.i + cls.j - (trial % 3 == 0 ? 1 : 0));
            }
        }
}

TEST(EvenPlanner, NearAntipodalLimitDegeneratesToNeighbouringStrata) {
    // Aligned pairs approaching antipodality: labels never increase along the sequence's limit.
    const EvenPlanner p(2, 2);
    const auto a = cfg({{0, 0}, {1, 0}});
    for (double eps : {1e-2, 1e-4, 1e-6, 1e-8}) {
        const auto b = cfg({{0, 0}, {-std::cos(eps), std::sin(eps)}});
        const auto cls = p.classify(a, b);
        EXPECT_EQ(cls.kind, PairClass::Kind::Aligned);
        EXPECT_EQ(p.region_index(a, b).k, 4);
    }
    const auto limit = p.classify(a, cfg({{0, 0}, {-1, 0}}));
    EXPECT_EQ(limit.kind, PairClass::Kind::Antipodal);
    EXPECT_LE(limit.i, 2);
    EXPECT_LE(limit.j, 2);
}
