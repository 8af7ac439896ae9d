/**
 * Tame motion planner for n distinct points in R^d (d >= 2) with 2n - 1
 * regions of continuity.
 *
 * The reference line L is the first coordinate axis. A pair (A, B) is routed
 * through four deformations and one section:
 *
 *   A --desingularize--> A1 --drop_to_line--> A2 --line_shuffle--> B2
 *     <--drop_to_line-- B1 <--desingularize-- B   (traversed backwards)
 *
 * The region of a pair is cp(A) + cp(B), where cp counts distinct projections
 * onto L.
 */
#pragma once

#include "tcmotion/geometry.hpp"
#include "tcmotion/line_ops.hpp"
#include "tcmotion/trajectory.hpp"

namespace tcmotion {

struct RegionIndex {
    int k = 0;
    friend bool operator==(RegionIndex, RegionIndex) = default;
    friend auto operator<=>(RegionIndex, RegionIndex) = default;
};

struct PlanResult {
    Trajectory trajectory;
    RegionIndex region;
};

class EuclidPlanner {
public:
    EuclidPlanner(int dim, int n, Tolerances tol = {});

    int dim() const { return dim_; }
    int n() const { return n_; }
    const Line& axis() const { return axis_; }
    const Vector& perp_direction() const { return perp_; }
    const Tolerances& tolerances() const { return tol_; }

    /// Smallest and largest region label this planner can emit.
    RegionIndex min_region() const { return {2}; }
    RegionIndex max_region() const { return {2 * n_}; }

    /// Number of distinct projections onto L.
    int cp(const Configuration& c) const;

    /// (1/n) * (smallest nonzero projection gap); exactly 1 when cp(c) = 1.
    double epsilon(const Configuration& c) const;

    /// z_j(t) = z_j + t (j - 1) epsilon(C) e. The endpoint always has cp = n.
    Trajectory desingularize(const Configuration& c) const;

    /// z_i(t) = z_i + t (p(z_i) - z_i). Requires cp(c) = n.
    Trajectory drop_to_line(const Configuration& c) const;

    /// Collision-free motion between two configurations lying on L.
    Trajectory line_shuffle(const Configuration& from, const Configuration& to) const;

    RegionIndex region_index(const Configuration& a, const Configuration& b) const;

    PlanResult plan(const Configuration& a, const Configuration& b) const;

private:
    void require_shape(const Configuration& c) const;

    int dim_;
    int n_;
    Tolerances tol_;
    Line axis_;
    Vector perp_;
};

}  // namespace tcmotion
