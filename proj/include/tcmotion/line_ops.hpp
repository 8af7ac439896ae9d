/**
 * Building blocks shared by the Euclidean planners: projections onto an
 * oriented line, desingularizing shifts, and the lift-move-drop section
 * between two configurations lying on a common line.
 */
#pragma once

#include <span>
#include <vector>

#include "tcmotion/geometry.hpp"
#include "tcmotion/trajectory.hpp"

namespace tcmotion {

/// Affine line {origin + s * direction}; direction is a unit vector.
struct Line {
    Vector origin;
    Vector direction;
};

/// Signed coordinates <z_i - origin, direction> of every point.
std::vector<double> line_coordinates(const Configuration& c, const Line& line);

/// Number of clusters after merging sorted values whose consecutive gap is below tol.
int count_distinct(std::vector<double> values, double tol);

/// Smallest gap between consecutive clusters; +infinity when there is only one cluster.
double min_distinct_gap(std::vector<double> values, double tol);

/// 1-based rank of each point in the order induced by `direction` (ties broken by index).
std::vector<int> ranks_along(const Configuration& c, std::span<const double> direction);

/// Orthogonal projection of every point onto the line.
Configuration project_onto_line(const Configuration& c, const Line& line);

/// True when every point is within tol of the line.
bool lies_on_line(const Configuration& c, const Line& line, double tol);

/// z_j(t) = z_j + t (j - 1) shift direction, j = 1..n.
Trajectory shift_by_index(const Configuration& c, std::span<const double> direction, double shift);

/// Clearance scale g = max(1, diameter(C u C')) / n used for lift heights.
double clearance_scale(const Configuration& from, const Configuration& to);

/**
 * Three-phase section between configurations on a common line: the point of
 * rank k (ordered along `order_direction`) lifts by k g lift_dir, all lifted
 * points translate to their targets at the same heights, then everything drops
 * onto `to`. Distinct heights keep the middle phase collision free and
 * distinct line coordinates keep the outer phases collision free.
 */
Trajectory lift_move_drop_along(const Configuration& from, const Configuration& to, std::span<const double> order_direction,
                                std::span<const double> lift_dir, double clearance);

}  // namespace tcmotion
