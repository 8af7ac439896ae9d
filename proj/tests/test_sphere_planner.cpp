#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <set>
#include <stdexcept>

#include "tcmotion/sphere_planner.hpp"
#include "tcmotion/verification.hpp"

using namespace tcmotion;

namespace {

SpherePoint sp(Vector v) { return SpherePoint(std::move(v)); }

Vector first_point(const Configuration& c) { return Vector(c.point(0).begin(), c.point(0).end()); }

SpherePoint antipode(const SpherePoint& p) {
    Vector v = p.coords();
    for (double& x : v) x = -x;
    return SpherePoint(v);
}

double max_drift(const Trajectory& t, int samples) {
    double worst = 0.0;
    for (int k = 0; k < samples; ++k)
        worst = std::max(worst, std::abs(norm(t.evaluate(k / double(samples - 1)).point(0)) - 1.0));
    return worst;
}

}  // namespace

TEST(SpherePoint, RequiresUnitNorm) {
    EXPECT_THROW(sp({1, 1}), std::invalid_argument);
    EXPECT_NO_THROW(sp({0, 1}));
}

TEST(Slerp, EqualPointsConstant) {
    const SpherePlanner p(3);
    const auto a = sp({0, 0, 1});
    EXPECT_EQ(p.slerp(a, a).evaluate(0.4), a.as_configuration());
}

TEST(Slerp, QuarterArcMidpoint) {
    const SpherePlanner p(3);
    const auto t = p.slerp(sp({1, 0, 0}), sp({0, 1, 0}));
    const Vector mid = first_point(t.evaluate(0.5));
    EXPECT_NEAR(mid[0], 1 / std::sqrt(2.0), 1e-12);
    EXPECT_NEAR(mid[1], 1 / std::sqrt(2.0), 1e-12);
    EXPECT_NEAR(mid[2], 0.0, 1e-12);
}

TEST(Slerp, ArcLengthEqualsAngle) {
    const SpherePlanner p(4);
    std::mt19937_64 rng(1);
    for (int trial = 0; trial < 20; ++trial) {
        const auto a = random_sphere_point(4, rng);
        const auto b = random_sphere_point(4, rng);
        const auto t = p.slerp(a, b);
        double length = 0.0;
        const int m = 4000;
        for (int k = 0; k < m; ++k)
            length += distance(t.evaluate(k / double(m)).point(0), t.evaluate((k + 1) / double(m)).point(0));
        EXPECT_NEAR(length, std::acos(std::clamp(dot(a.coords(), b.coords()), -1.0, 1.0)), 1e-6);
        EXPECT_LE(max_drift(t, 200), 1e-12);
    }
}

TEST(Slerp, RejectsAntipodes) {
    const SpherePlanner p(2);
    EXPECT_THROW(p.slerp(sp({1, 0}), sp({-1, 0})), std::invalid_argument);
}

TEST(TangentField, OddExamples) {
    EXPECT_EQ(SpherePlanner(2).tangent_field_odd(sp({1, 0})), (Vector{0, 1}));
    EXPECT_EQ(SpherePlanner(4).tangent_field_odd(sp({0, 0, 1, 0})), (Vector{0, 0, 0, 1}));
    EXPECT_THROW(SpherePlanner(3).tangent_field_odd(sp({1, 0, 0})), std::invalid_argument);
}

TEST(TangentField, OddIsTangent) {
    std::mt19937_64 rng(4);
    const SpherePlanner p(6);
    for (int trial = 0; trial < 100; ++trial) {
        const auto a = random_sphere_point(6, rng);
        EXPECT_NEAR(dot(a.coords(), p.tangent_field_odd(a)), 0.0, 1e-15);
    }
}

TEST(TangentField, EvenVanishesExactlyAtPole) {
    const SpherePlanner p(3);
    const auto zero = p.tangent_field_even(p.field_zero());
    EXPECT_EQ(norm(zero), 0.0);
    const auto opposite = p.tangent_field_even(antipode(p.field_zero()));
    EXPECT_GT(norm(opposite), 1.0);
    EXPECT_NEAR(dot(opposite, antipode(p.field_zero()).coords()), 0.0, 1e-15);
}

TEST(TangentField, EvenNonzeroAndTangentAwayFromPole) {
    std::mt19937_64 rng(9);
    for (int ambient : {3, 5}) {
        const SpherePlanner p(ambient);
        for (int trial = 0; trial < 10000; ++trial) {
            const auto a = random_sphere_point(ambient, rng);
            const auto v = p.tangent_field_even(a);
            EXPECT_GT(norm(v), 0.0);
            EXPECT_NEAR(dot(a.coords(), v), 0.0, 1e-12);
        }
    }
}

TEST(Semicircle, CircleExample) {
    const SpherePlanner p(2);
    const auto t = p.semicircle(sp({1, 0}), Vector{0, 1});
    const Vector mid = first_point(t.evaluate(0.5));
    EXPECT_NEAR(mid[0], 0.0, 1e-15);
    EXPECT_NEAR(mid[1], 1.0, 1e-15);
    const Vector end = first_point(t.evaluate(1.0));
    EXPECT_NEAR(end[0], -1.0, 1e-12);
    EXPECT_NEAR(end[1], 0.0, 1e-12);
    EXPECT_LE(max_drift(t, 1000), 1e-12);
}

TEST(Semicircle, RejectsNonTangentOrNonUnit) {
    const SpherePlanner p(2);
    EXPECT_THROW(p.semicircle(sp({1, 0}), Vector{1, 0}), std::invalid_argument);
    EXPECT_THROW(p.semicircle(sp({1, 0}), Vector{0, 2}), std::invalid_argument);
}

TEST(SpherePlanner, OddSphereUsesTwoRegions) {
    std::mt19937_64 rng(6);
    const SpherePlanner p(4);
    std::set<SphereRegion> seen;
    for (int trial = 0; trial < 500; ++trial) {
        const auto a = random_sphere_point(4, rng);
        const auto b = trial % 2 ? antipode(a) : random_sphere_point(4, rng);
        seen.insert(p.plan(a, b).region);
    }
    seen.insert(p.plan(p.field_zero(), antipode(p.field_zero())).region);
    EXPECT_EQ(seen, (std::set<SphereRegion>{SphereRegion::F1, SphereRegion::F2}));
    EXPECT_EQ(p.region_count(), 2);
}

TEST(SpherePlanner, EvenSphereUsesThreeRegions) {
    const SpherePlanner p(3);
    EXPECT_EQ(p.plan(sp({1, 0, 0}), sp({0, 1, 0})).region, SphereRegion::F1);
    EXPECT_EQ(p.plan(sp({1, 0, 0}), sp({-1, 0, 0})).region, SphereRegion::F2);
    EXPECT_EQ(p.plan(p.field_zero(), antipode(p.field_zero())).region, SphereRegion::F3);
    EXPECT_EQ(p.region_count(), 3);
}

TEST(SpherePlanner, PlansAreSectionsOnTheSphere) {
    std::mt19937_64 rng(8);
    for (int ambient : {2, 3, 4, 5}) {
        const SpherePlanner p(ambient);
        for (int trial = 0; trial < 50; ++trial) {
            const auto a = trial == 0 ? p.field_zero() : random_sphere_point(ambient, rng);
            const auto b = trial % 3 == 0 ? antipode(a) : random_sphere_point(ambient, rng);
            const auto t = p.plan(a, b).trajectory;
            EXPECT_LE(max_norm_distance(t.evaluate(0.0), a.as_configuration()), 1e-12);
            EXPECT_LE(max_norm_distance(t.evaluate(1.0), b.as_configuration()), 1e-12);
            EXPECT_LE(max_drift(t, 1000), 1e-9);
        }
    }
}

TEST(SpherePlanner, CircleAntipodesTurnOneWay) {
    // On the circle every antipodal pair turns counterclockwise, as in the two-set planner for S^1.
    const SpherePlanner p(2);
    for (double angle : {0.0, 1.0, 2.5, 4.0}) {
        const auto a = sp({std::cos(angle), std::sin(angle)});
        const Vector mid = first_point(p.plan(a, antipode(a)).trajectory.evaluate(0.5));
        EXPECT_NEAR(mid[0], std::cos(angle + std::numbers::pi / 2), 1e-12);
        EXPECT_NEAR(mid[1], std::sin(angle + std::numbers::pi / 2), 1e-12);
    }
}
