/**
 * Tame motion planner on the unit sphere S^m in R^{m+1}.
 *
 * Regions: F1 = non-antipodal pairs (shortest geodesic); F2 = antipodal pairs
 * moved along the semicircle tangent to a vector field; F3 (m even only) =
 * the single pair (A0, -A0) at the zero of that field. Trajectories are
 * one-point configurations in the ambient space.
 */
#pragma once

#include <span>

#include "tcmotion/geometry.hpp"
#include "tcmotion/trajectory.hpp"

namespace tcmotion {

/// A unit vector in R^{m+1}; construction rejects | |x| - 1 | > 1e-12.
class SpherePoint {
public:
    explicit SpherePoint(Vector coords);
    /// Normalizes an arbitrary nonzero vector.
    static SpherePoint from_direction(std::span<const double> v);

    const Vector& coords() const { return coords_; }
    int ambient_dim() const { return static_cast<int>(coords_.size()); }
    Configuration as_configuration() const { return Configuration(ambient_dim(), coords_); }

private:
    Vector coords_;
};

enum class SphereRegion { F1 = 1, F2 = 2, F3 = 3 };

struct SpherePlan {
    Trajectory trajectory;
    SphereRegion region;
};

class SpherePlanner {
public:
    /// Ambient dimension m + 1 >= 2. The field zero A0 defaults to the last basis vector.
    explicit SpherePlanner(int ambient_dim, Tolerances tol = {});

    int ambient_dim() const { return ambient_; }
    int sphere_dim() const { return ambient_ - 1; }
    const SpherePoint& field_zero() const { return pole_; }
    /// 2 for odd sphere dimension, 3 for even.
    int region_count() const { return sphere_dim() % 2 == 1 ? 2 : 3; }

    Trajectory slerp(const SpherePoint& a, const SpherePoint& b) const;

    /// Nowhere-zero unit tangent field (-x2, x1, ..., -x_{m+1}, x_m); odd sphere dimension only.
    Vector tangent_field_odd(const SpherePoint& a) const;

    /**
     * Tangent field vanishing only at A0: the pushforward of a constant planar
     * field under inverse stereographic projection from A0.
     */
    Vector tangent_field_even(const SpherePoint& a) const;

    /// gamma(t) = cos(pi t) A + sin(pi t) v, for a unit tangent v at A.
    Trajectory semicircle(const SpherePoint& a, std::span<const double> v) const;

    SphereRegion region(const SpherePoint& a, const SpherePoint& b) const;
    SpherePlan plan(const SpherePoint& a, const SpherePoint& b) const;

private:
    bool antipodal(const SpherePoint& a, const SpherePoint& b) const;
    Vector unit_tangent(const SpherePoint& a) const;
    Trajectory antipodal_arc(const SpherePoint& a, const Vector& v, const SpherePoint& b) const;

    int ambient_;
    Tolerances tol_;
    SpherePoint pole_;
    Vector planar_field_;  // constant field in the tangent plane at -A0
};

}  // namespace tcmotion
