#include "tcmotion/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace tcmotion {

Configuration::Configuration(int dim, std::vector<double> coords) : dim_(dim), coords_(std::move(coords)) {
    if (dim < 2)
        throw std::invalid_argument("configuration dimension must be at least 2, got " + std::to_string(dim));
    if (coords_.empty() || coords_.size() % static_cast<std::size_t>(dim) != 0)
        throw std::invalid_argument("configuration needs a positive multiple of dim coordinates");
    for (double x : coords_)
        if (!std::isfinite(x)) throw std::invalid_argument("configuration coordinates must be finite");
    if (!(min_separation(*this) > 0.0))
        throw std::invalid_argument("configuration points must be pairwise distinct");
}

Configuration::Configuration(int dim, const std::vector<Vector>& points) {
    std::vector<double> flat;
    flat.reserve(points.size() * static_cast<std::size_t>(std::max(dim, 0)));
    for (const auto& p : points) {
        if (static_cast<int>(p.size()) != dim)
            throw std::invalid_argument("every point must have exactly " + std::to_string(dim) + " coordinates");
        flat.insert(flat.end(), p.begin(), p.end());
    }
    *this = Configuration(dim, std::move(flat));
}

Configuration Configuration::unchecked(int dim, std::vector<double> coords) {
    Configuration c;
    c.dim_ = dim;
    c.coords_ = std::move(coords);
    return c;
}

bool Configuration::is_valid() const {
    if (dim_ < 2 || coords_.empty()) return false;
    for (double x : coords_)
        if (!std::isfinite(x)) return false;
    return min_separation(*this) > 0.0;
}

double dot(std::span<const double> a, std::span<const double> b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

double norm(std::span<const double> a) { return std::sqrt(dot(a, a)); }

double distance(std::span<const double> a, std::span<const double> b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double d = a[i] - b[i];
        s += d * d;
    }
    return std::sqrt(s);
}

Vector normalized(std::span<const double> a) {
    const double len = norm(a);
    if (!(len > 0.0)) throw std::invalid_argument("cannot normalize a zero vector");
    Vector out(a.begin(), a.end());
    for (double& x : out) x /= len;
    return out;
}

Vector basis_vector(int dim, int axis) {
    Vector v(static_cast<std::size_t>(dim), 0.0);
    v[static_cast<std::size_t>(axis)] = 1.0;
    return v;
}

double min_separation(const Configuration& c) {
    const int n = c.size();
    double best = kInfinity;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) best = std::min(best, distance(c.point(i), c.point(j)));
    return best;
}

double diameter(std::initializer_list<const Configuration*> configs) {
    std::vector<std::span<const double>> pts;
    for (const Configuration* c : configs)
        for (int i = 0; i < c->size(); ++i) pts.push_back(c->point(i));
    double best = 0.0;
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j) best = std::max(best, distance(pts[i], pts[j]));
    return best;
}

double diameter(const Configuration& c) { return diameter({&c}); }

double max_norm_distance(const Configuration& a, const Configuration& b) {
    require_same_shape(a, b);
    double best = 0.0;
    for (std::size_t i = 0; i < a.coords().size(); ++i)
        best = std::max(best, std::abs(a.coords()[i] - b.coords()[i]));
    return best;
}

void require_same_shape(const Configuration& a, const Configuration& b) {
    if (a.dim() != b.dim())
        throw std::invalid_argument("dimension mismatch: " + std::to_string(a.dim()) + " vs " + std::to_string(b.dim()));
    if (a.size() != b.size())
        throw std::invalid_argument("point count mismatch: " + std::to_string(a.size()) + " vs " +
                                    std::to_string(b.size()));
}

}  // namespace tcmotion
