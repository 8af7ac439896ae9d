#include "tcmotion/line_ops.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace tcmotion {

std::vector<double> line_coordinates(const Configuration& c, const Line& line) {
    std::vector<double> out(static_cast<std::size_t>(c.size()));
    Vector rel(static_cast<std::size_t>(c.dim()));
    for (int i = 0; i < c.size(); ++i) {
        auto p = c.point(i);
        for (int k = 0; k < c.dim(); ++k) rel[k] = p[k] - line.origin[k];
        out[i] = dot(rel, line.direction);
    }
    return out;
}

int count_distinct(std::vector<double> values, double tol) {
    if (values.empty()) return 0;
    std::sort(values.begin(), values.end());
    int clusters = 1;
    for (std::size_t i = 1; i < values.size(); ++i)
        if (values[i] - values[i - 1] >= tol) ++clusters;
    return clusters;
}

double min_distinct_gap(std::vector<double> values, double tol) {
    std::sort(values.begin(), values.end());
    double best = kInfinity;
    for (std::size_t i = 1; i < values.size(); ++i) {
        const double gap = values[i] - values[i - 1];
        if (gap >= tol) best = std::min(best, gap);
    }
    return best;
}

std::vector<int> ranks_along(const Configuration& c, std::span<const double> direction) {
    const int n = c.size();
    std::vector<double> key(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) key[i] = dot(c.point(i), direction);
    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return key[a] < key[b]; });
    std::vector<int> rank(static_cast<std::size_t>(n));
    for (int r = 0; r < n; ++r) rank[order[r]] = r + 1;
    return rank;
}

Configuration project_onto_line(const Configuration& c, const Line& line) {
    const auto s = line_coordinates(c, line);
    std::vector<double> out(c.coords().size());
    for (int i = 0; i < c.size(); ++i)
        for (int k = 0; k < c.dim(); ++k)
            out[static_cast<std::size_t>(i) * c.dim() + k] = line.origin[k] + s[i] * line.direction[k];
    return Configuration::unchecked(c.dim(), std::move(out));
}

bool lies_on_line(const Configuration& c, const Line& line, double tol) {
    const auto proj = project_onto_line(c, line);
    for (int i = 0; i < c.size(); ++i)
        if (distance(c.point(i), proj.point(i)) > tol) return false;
    return true;
}

Trajectory shift_by_index(const Configuration& c, std::span<const double> direction, double shift) {
    std::vector<double> out(c.coords());
    for (int j = 0; j < c.size(); ++j)
        for (int k = 0; k < c.dim(); ++k) out[static_cast<std::size_t>(j) * c.dim() + k] += j * shift * direction[k];
    return linear_move(c, Configuration::unchecked(c.dim(), std::move(out)));
}

double clearance_scale(const Configuration& from, const Configuration& to) {
    return std::max(1.0, diameter({&from, &to})) / from.size();
}

Trajectory lift_move_drop_along(const Configuration& from, const Configuration& to, std::span<const double> order_direction,
                                std::span<const double> lift_dir, double clearance) {
    require_same_shape(from, to);
    const auto rank = ranks_along(from, order_direction);
    const int d = from.dim();
    std::vector<double> lifted_from(from.coords());
    std::vector<double> lifted_to(to.coords());
    for (int i = 0; i < from.size(); ++i) {
        const double h = rank[i] * clearance;
        for (int k = 0; k < d; ++k) {
            lifted_from[static_cast<std::size_t>(i) * d + k] += h * lift_dir[k];
            lifted_to[static_cast<std::size_t>(i) * d + k] += h * lift_dir[k];
        }
    }
    const auto up = Configuration::unchecked(d, std::move(lifted_from));
    const auto across = Configuration::unchecked(d, std::move(lifted_to));
    return concatenate({linear_move(from, up), linear_move(up, across), linear_move(across, to)});
}

}  // namespace tcmotion
