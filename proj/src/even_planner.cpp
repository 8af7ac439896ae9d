#include "tcmotion/even_planner.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace tcmotion {

Vector direction(const Configuration& c) {
    if (c.size() < 2) throw std::invalid_argument("direction needs at least two points");
    Vector diff(static_cast<std::size_t>(c.dim()));
    for (int k = 0; k < c.dim(); ++k) diff[k] = c.point(1)[k] - c.point(0)[k];
    return normalized(diff);
}

Line direction_line(const Configuration& c) {
    auto z1 = c.point(0);
    return Line{Vector(z1.begin(), z1.end()), direction(c)};
}

Vector perp_field(std::span<const double> u) {
    if (u.size() % 2 != 0)
        throw std::invalid_argument("perpendicular field needs even dimension, got " + std::to_string(u.size()));
    Vector out(u.size());
    for (std::size_t k = 0; k < u.size(); k += 2) {
        out[k] = -u[k + 1];
        out[k + 1] = u[k];
    }
    return out;
}

EvenPlanner::EvenPlanner(int dim, int n, Tolerances tol) : dim_(dim), n_(n), tol_(tol) {
    if (dim < 2 || dim % 2 != 0)
        throw std::invalid_argument("even-dimension planner needs even d >= 2, got d=" + std::to_string(dim));
    if (n < 2) throw std::invalid_argument("even-dimension planner needs n >= 2");
}

void EvenPlanner::require_shape(const Configuration& c) const {
    if (c.dim() != dim_ || c.size() != n_)
        throw std::invalid_argument("configuration shape (n=" + std::to_string(c.size()) + ", d=" +
                                    std::to_string(c.dim()) + ") does not match planner (n=" + std::to_string(n_) +
                                    ", d=" + std::to_string(dim_) + ")");
}

double EvenPlanner::line_tol(const Configuration& a, const Configuration& b) const {
    return 1e-9 * std::max(1.0, diameter({&a, &b}));
}

int EvenPlanner::cp_dirline(const Configuration& c) const {
    require_shape(c);
    return count_distinct(line_coordinates(c, direction_line(c)), tol_.proj_eq_abs(diameter(c)));
}

double EvenPlanner::epsilon_dirline(const Configuration& c) const {
    require_shape(c);
    return min_distinct_gap(line_coordinates(c, direction_line(c)), tol_.proj_eq_abs(diameter(c))) / n_;
}

PairClass EvenPlanner::classify(const Configuration& a, const Configuration& b) const {
    const Vector ea = direction(a);
    const Vector eb = direction(b);
    Vector sum(ea.size());
    for (std::size_t k = 0; k < sum.size(); ++k) sum[k] = ea[k] + eb[k];
    const auto kind = norm(sum) < tol_.antipodal_tol ? PairClass::Kind::Antipodal : PairClass::Kind::Aligned;
    return {kind, cp_dirline(a), cp_dirline(b)};
}

Trajectory EvenPlanner::colinearize(const Configuration& c) const {
    const Line line = direction_line(c);
    const Trajectory desing = shift_by_index(c, line.direction, epsilon_dirline(c));
    const Configuration& shifted = desing.end();
    return concatenate({desing, linear_move(shifted, project_onto_line(shifted, line))});
}

Trajectory EvenPlanner::rotate_align(const Configuration& c, std::span<const double> target_dir) const {
    const Line line = direction_line(c);
    if (!lies_on_line(c, line, line_tol(c, c)))
        throw std::invalid_argument("rotate_align requires a collinear configuration");
    const Vector& u = line.direction;
    Vector sum(u.size());
    for (std::size_t k = 0; k < u.size(); ++k) sum[k] = u[k] + target_dir[k];
    if (norm(sum) < tol_.antipodal_tol)
        throw std::invalid_argument("rotate_align target is antipodal to the configuration direction");
    const double cos_angle = dot(u, target_dir);
    Vector w(u.size());
    for (std::size_t k = 0; k < u.size(); ++k) w[k] = target_dir[k] - cos_angle * u[k];
    const double sin_angle = norm(w);
    if (sin_angle < 1e-15) return Trajectory::constant(c);
    for (double& x : w) x /= sin_angle;
    return Trajectory::from_segment(make_rotation(c, line.origin, u, std::move(w), std::atan2(sin_angle, cos_angle)));
}

Trajectory EvenPlanner::translate_align(const Configuration& c, const Line& target) const {
    const Vector dir = direction(c);
    if (std::abs(std::abs(dot(dir, target.direction)) - 1.0) > 1e-9)
        throw std::invalid_argument("translate_align requires the configuration to be parallel to the target line");
    auto z1 = c.point(0);
    Vector delta(z1.size());
    for (std::size_t k = 0; k < delta.size(); ++k) delta[k] = target.origin[k] - z1[k];
    const double along = dot(delta, target.direction);
    for (std::size_t k = 0; k < delta.size(); ++k) delta[k] -= along * target.direction[k];
    std::vector<double> out(c.coords());
    for (int i = 0; i < c.size(); ++i)
        for (int k = 0; k < c.dim(); ++k) out[static_cast<std::size_t>(i) * c.dim() + k] += delta[k];
    return linear_move(c, Configuration::unchecked(c.dim(), std::move(out)));
}

Trajectory EvenPlanner::lift_move_drop(const Configuration& from, const Configuration& to,
                                       std::span<const double> lift_dir) const {
    require_same_shape(from, to);
    const Line line = direction_line(from);
    const double tol = line_tol(from, to);
    if (!lies_on_line(from, line, tol) || !lies_on_line(to, line, tol))
        throw std::invalid_argument("lift_move_drop requires both configurations on a common line");
    if (std::abs(dot(lift_dir, line.direction)) > 1e-9 || std::abs(norm(lift_dir) - 1.0) > 1e-9)
        throw std::invalid_argument("lift direction must be a unit vector perpendicular to the line");
    return lift_move_drop_along(from, to, line.direction, lift_dir, clearance_scale(from, to));
}

RegionIndex EvenPlanner::region_index(const Configuration& a, const Configuration& b) const {
    const PairClass pc = classify(a, b);
    return {pc.kind == PairClass::Kind::Aligned ? pc.i + pc.j : pc.i + pc.j - 1};
}

PlanResult EvenPlanner::plan(const Configuration& a, const Configuration& b) const {
    require_shape(a);
    require_shape(b);
    const PairClass pc = classify(a, b);
    const Trajectory col_a = colinearize(a);
    const Trajectory col_b = colinearize(b);
    const Configuration& a_line = col_a.end();
    const Configuration& b_line = col_b.end();
    const Line target = direction_line(b);

    Trajectory rotation = Trajectory::constant(a_line);
    if (pc.kind == PairClass::Kind::Aligned) rotation = rotate_align(a_line, target.direction);
    const Trajectory translation = translate_align(rotation.end(), target);
    const Trajectory shuffle = lift_move_drop(translation.end(), b_line, perp_field(target.direction));

    const RegionIndex region{pc.kind == PairClass::Kind::Aligned ? pc.i + pc.j : pc.i + pc.j - 1};
    return {concatenate({col_a, rotation, translation, shuffle, col_b.reversed()}, tol_.junction_tol), region};
}

}  // namespace tcmotion
