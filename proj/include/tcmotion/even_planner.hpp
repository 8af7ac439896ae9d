/**
 * Improved planner for n points in R^d with d even: 2n - 2 regions of
 * continuity W_3, ..., W_2n.
 *
 * Each configuration carries its own oriented line L_C through z_1 and z_2.
 * A pair is either Aligned (e_A != -e_B) or Antipodal (e_A = -e_B within
 * tolerance). Both branches colinearize each side onto its own line, bring
 * the A side onto L_B (rotation about z_1 for Aligned pairs, then a parallel
 * translation), and finish with lift_move_drop using a nowhere-vanishing
 * perpendicular field, which exists only in even dimension.
 */
#pragma once

#include "tcmotion/euclid_planner.hpp"
#include "tcmotion/geometry.hpp"
#include "tcmotion/line_ops.hpp"
#include "tcmotion/trajectory.hpp"

namespace tcmotion {

struct PairClass {
    enum class Kind { Aligned, Antipodal };
    Kind kind = Kind::Aligned;
    int i = 0;  // cp_dirline of the start configuration
    int j = 0;  // cp_dirline of the goal configuration
    friend bool operator==(const PairClass&, const PairClass&) = default;
};

/// Unit vector from z_1 toward z_2.
Vector direction(const Configuration& c);

/// Line through z_1 with direction e_C.
Line direction_line(const Configuration& c);

/// Coordinate-pairing field (u1, u2, ..., u_{d-1}, u_d) -> (-u2, u1, ..., -u_d, u_{d-1}); d must be even.
Vector perp_field(std::span<const double> u);

class EvenPlanner {
public:
    EvenPlanner(int dim, int n, Tolerances tol = {});

    int dim() const { return dim_; }
    int n() const { return n_; }
    const Tolerances& tolerances() const { return tol_; }

    RegionIndex min_region() const { return {3}; }
    RegionIndex max_region() const { return {2 * n_}; }

    /// Distinct projections onto L_C; always in {2, ..., n}.
    int cp_dirline(const Configuration& c) const;
    double epsilon_dirline(const Configuration& c) const;

    PairClass classify(const Configuration& a, const Configuration& b) const;

    /// Desingularize along e_C, then project onto L_C.
    Trajectory colinearize(const Configuration& c) const;

    /// Rigid rotation about z_1 taking e_C to target_dir along the minimal geodesic.
    Trajectory rotate_align(const Configuration& c, std::span<const double> target_dir) const;

    /// Rigid translation moving a collinear configuration onto the target line (directions must be parallel).
    Trajectory translate_align(const Configuration& c, const Line& target) const;

    /// Lift-move-drop between configurations on a common line; lift_dir must be perpendicular to it.
    Trajectory lift_move_drop(const Configuration& from, const Configuration& to, std::span<const double> lift_dir) const;

    RegionIndex region_index(const Configuration& a, const Configuration& b) const;

    PlanResult plan(const Configuration& a, const Configuration& b) const;

private:
    void require_shape(const Configuration& c) const;
    double line_tol(const Configuration& a, const Configuration& b) const;

    int dim_;
    int n_;
    Tolerances tol_;
};

}  // namespace tcmotion
