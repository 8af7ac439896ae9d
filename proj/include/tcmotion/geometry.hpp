/**
 * Configurations of distinct points in R^d and the numeric tolerances shared
 * by every planner.
 */
#pragma once

#include <cstddef>
#include <initializer_list>
#include <limits>
#include <span>
#include <vector>

namespace tcmotion {

using Vector = std::vector<double>;

/**
 * Numeric tolerances. The relative entries are multiplied by a length scale
 * (usually the configuration diameter) before use.
 */
struct Tolerances {
    double proj_eq_rel = 1e-9;    // projections closer than this (x scale) are equal
    double antipodal_tol = 1e-9;  // |u + v| below this means u, v antipodal
    double sep_rel = 1e-6;        // admissible separation during verification (x diameter)
    double junction_tol = 1e-9;   // max-norm mismatch allowed when concatenating

    /// Absolute projection-equality threshold for a configuration of the given diameter.
    double proj_eq_abs(double diameter) const { return proj_eq_rel * (diameter > 0 ? diameter : 1.0); }
    double sep_abs(double diameter) const { return sep_rel * (diameter > 0 ? diameter : 1.0); }
};

/**
 * An ordered list of n points in R^d stored row-major.
 *
 * The public constructor enforces the configuration-space invariants
 * (d >= 2, n >= 1, finite coordinates, pairwise distinct points).
 * Trajectory evaluation uses `unchecked` so that negative controls can
 * represent colliding states.
 */
class Configuration {
public:
    Configuration() = default;
    Configuration(int dim, std::vector<double> coords);
    Configuration(int dim, const std::vector<Vector>& points);

    static Configuration unchecked(int dim, std::vector<double> coords);

    int dim() const { return dim_; }
    int size() const { return dim_ == 0 ? 0 : static_cast<int>(coords_.size()) / dim_; }

    std::span<const double> point(int i) const {
        return {coords_.data() + static_cast<std::size_t>(i) * dim_, static_cast<std::size_t>(dim_)};
    }
    std::span<double> point(int i) {
        return {coords_.data() + static_cast<std::size_t>(i) * dim_, static_cast<std::size_t>(dim_)};
    }
    const std::vector<double>& coords() const { return coords_; }

    /// True when all coordinates are finite and all points pairwise distinct.
    bool is_valid() const;

    friend bool operator==(const Configuration&, const Configuration&) = default;

private:
    int dim_ = 0;
    std::vector<double> coords_;
};

// Vector helpers over spans.
double dot(std::span<const double> a, std::span<const double> b);
double norm(std::span<const double> a);
double distance(std::span<const double> a, std::span<const double> b);
Vector normalized(std::span<const double> a);
Vector basis_vector(int dim, int axis);

/// Minimum pairwise Euclidean distance; +infinity when fewer than 2 points.
double min_separation(const Configuration& c);

/// Maximum pairwise distance over the points of all given configurations.
double diameter(std::initializer_list<const Configuration*> configs);
double diameter(const Configuration& c);

/// Max-norm distance between two configurations of equal shape.
double max_norm_distance(const Configuration& a, const Configuration& b);

/// Same shape check; throws std::invalid_argument naming the mismatch.
void require_same_shape(const Configuration& a, const Configuration& b);

constexpr double kInfinity = std::numeric_limits<double>::infinity();

}  // namespace tcmotion
