#include "tcmotion/euclid_planner.hpp"

#include <stdexcept>
#include <string>

namespace tcmotion {

EuclidPlanner::EuclidPlanner(int dim, int n, Tolerances tol)
    : dim_(dim), n_(n), tol_(tol), axis_{Vector(static_cast<std::size_t>(std::max(dim, 2)), 0.0), {}} {
    if (dim < 2) throw std::invalid_argument("euclid planner needs d >= 2");
    if (n < 2) throw std::invalid_argument("euclid planner needs n >= 2");
    axis_.direction = basis_vector(dim, 0);
    perp_ = basis_vector(dim, 1);
}

void EuclidPlanner::require_shape(const Configuration& c) const {
    if (c.dim() != dim_ || c.size() != n_)
        throw std::invalid_argument("configuration shape (n=" + std::to_string(c.size()) + ", d=" +
                                    std::to_string(c.dim()) + ") does not match planner (n=" + std::to_string(n_) +
                                    ", d=" + std::to_string(dim_) + ")");
}

int EuclidPlanner::cp(const Configuration& c) const {
    require_shape(c);
    return count_distinct(line_coordinates(c, axis_), tol_.proj_eq_abs(diameter(c)));
}

double EuclidPlanner::epsilon(const Configuration& c) const {
    require_shape(c);
    const double gap = min_distinct_gap(line_coordinates(c, axis_), tol_.proj_eq_abs(diameter(c)));
    if (gap == kInfinity) return 1.0;
    return gap / n_;
}

Trajectory EuclidPlanner::desingularize(const Configuration& c) const {
    return shift_by_index(c, axis_.direction, epsilon(c));
}

Trajectory EuclidPlanner::drop_to_line(const Configuration& c) const {
    if (cp(c) != n_)
        throw std::invalid_argument("drop_to_line requires distinct projections (cp = n); desingularize first");
    return linear_move(c, project_onto_line(c, axis_));
}

Trajectory EuclidPlanner::line_shuffle(const Configuration& from, const Configuration& to) const {
    require_shape(from);
    require_shape(to);
    if (!lies_on_line(from, axis_, 1e-12) || !lies_on_line(to, axis_, 1e-12))
        throw std::invalid_argument("line_shuffle requires both configurations on the reference line");
    return lift_move_drop_along(from, to, axis_.direction, perp_, clearance_scale(from, to));
}

RegionIndex EuclidPlanner::region_index(const Configuration& a, const Configuration& b) const {
    return {cp(a) + cp(b)};
}

PlanResult EuclidPlanner::plan(const Configuration& a, const Configuration& b) const {
    require_shape(a);
    require_shape(b);
    const Trajectory desing_a = desingularize(a);
    const Trajectory desing_b = desingularize(b);
    const Trajectory drop_a = drop_to_line(desing_a.end());
    const Trajectory drop_b = drop_to_line(desing_b.end());
    const Trajectory shuffle = line_shuffle(drop_a.end(), drop_b.end());
    return {concatenate({desing_a, drop_a, shuffle, drop_b.reversed(), desing_b.reversed()}, tol_.junction_tol),
            region_index(a, b)};
}

}  // namespace tcmotion
