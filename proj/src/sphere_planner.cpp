#include "tcmotion/sphere_planner.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace tcmotion {

SpherePoint::SpherePoint(Vector coords) : coords_(std::move(coords)) {
    if (coords_.size() < 2) throw std::invalid_argument("sphere points need ambient dimension >= 2");
    if (std::abs(norm(coords_) - 1.0) > 1e-12) throw std::invalid_argument("sphere point must have unit norm");
}

SpherePoint SpherePoint::from_direction(std::span<const double> v) { return SpherePoint(normalized(v)); }

SpherePlanner::SpherePlanner(int ambient_dim, Tolerances tol)
    : ambient_(ambient_dim),
      tol_(tol),
      pole_(basis_vector(std::max(ambient_dim, 2), std::max(ambient_dim, 2) - 1)),
      planar_field_(basis_vector(std::max(ambient_dim, 2), 0)) {
    if (ambient_dim < 2) throw std::invalid_argument("sphere planner needs ambient dimension >= 2");
}

bool SpherePlanner::antipodal(const SpherePoint& a, const SpherePoint& b) const {
    Vector sum(a.coords().size());
    for (std::size_t k = 0; k < sum.size(); ++k) sum[k] = a.coords()[k] + b.coords()[k];
    return norm(sum) < tol_.antipodal_tol;
}

Trajectory SpherePlanner::slerp(const SpherePoint& a, const SpherePoint& b) const {
    if (a.ambient_dim() != ambient_ || b.ambient_dim() != ambient_)
        throw std::invalid_argument("sphere point dimension does not match planner");
    if (antipodal(a, b)) throw std::invalid_argument("slerp is undefined for antipodal points");
    const auto& x = a.coords();
    const auto& y = b.coords();
    const double c = dot(x, y);
    Vector w(x.size());
    for (std::size_t k = 0; k < w.size(); ++k) w[k] = y[k] - c * x[k];
    const double s = norm(w);
    const Configuration from = a.as_configuration();
    const Configuration to = b.as_configuration();
    if (s < 1e-15) {
        Vector blend(x.size());
        for (std::size_t k = 0; k < blend.size(); ++k) blend[k] = y[k] - x[k];
        return Trajectory::from_segment(ArcSegment{from, Vector(x.size(), 0.0), 0.0, std::move(blend), to});
    }
    for (double& wk : w) wk /= s;
    return Trajectory::from_segment(ArcSegment{from, std::move(w), std::atan2(s, c), Vector(x.size(), 0.0), to});
}

Vector SpherePlanner::tangent_field_odd(const SpherePoint& a) const {
    if (sphere_dim() % 2 == 0)
        throw std::invalid_argument("no nowhere-zero tangent field on an even-dimensional sphere");
    const auto& x = a.coords();
    Vector v(x.size());
    for (std::size_t k = 0; k < x.size(); k += 2) {
        v[k] = -x[k + 1];
        v[k + 1] = x[k];
    }
    return normalized(v);
}

Vector SpherePlanner::tangent_field_even(const SpherePoint& a) const {
    // v(x) = (1 - <x, A0>) c + <x, c> (A0 - x), with c the constant planar field.
    const auto& x = a.coords();
    const auto& pole = pole_.coords();
    const double one_minus_t = 0.5 * distance(x, pole) * distance(x, pole);
    const double xc = dot(x, planar_field_);
    Vector v(x.size());
    for (std::size_t k = 0; k < v.size(); ++k) v[k] = one_minus_t * planar_field_[k] + xc * (pole[k] - x[k]);
    return v;
}

Trajectory SpherePlanner::semicircle(const SpherePoint& a, std::span<const double> v) const {
    if (std::abs(dot(a.coords(), v)) > 1e-9 || std::abs(norm(v) - 1.0) > 1e-9)
        throw std::invalid_argument("semicircle needs a unit vector tangent at the start point");
    Vector minus_a(a.coords());
    for (double& x : minus_a) x = -x;
    return Trajectory::from_segment(ArcSegment{a.as_configuration(), Vector(v.begin(), v.end()), std::numbers::pi,
                                               Vector(a.coords().size(), 0.0), Configuration(ambient_, minus_a)});
}

Trajectory SpherePlanner::antipodal_arc(const SpherePoint& a, const Vector& v, const SpherePoint& b) const {
    Vector blend(a.coords().size());
    for (std::size_t k = 0; k < blend.size(); ++k) blend[k] = b.coords()[k] + a.coords()[k];
    return Trajectory::from_segment(
        ArcSegment{a.as_configuration(), v, std::numbers::pi, std::move(blend), b.as_configuration()});
}

Vector SpherePlanner::unit_tangent(const SpherePoint& a) const {
    if (sphere_dim() % 2 == 1) return tangent_field_odd(a);
    return normalized(tangent_field_even(a));
}

SphereRegion SpherePlanner::region(const SpherePoint& a, const SpherePoint& b) const {
    if (!antipodal(a, b)) return SphereRegion::F1;
    if (sphere_dim() % 2 == 0 && distance(a.coords(), pole_.coords()) < tol_.antipodal_tol) return SphereRegion::F3;
    return SphereRegion::F2;
}

SpherePlan SpherePlanner::plan(const SpherePoint& a, const SpherePoint& b) const {
    if (a.ambient_dim() != ambient_ || b.ambient_dim() != ambient_)
        throw std::invalid_argument("sphere point dimension does not match planner");
    const SphereRegion r = region(a, b);
    switch (r) {
        case SphereRegion::F1:
            return {slerp(a, b), r};
        case SphereRegion::F2:
            return {antipodal_arc(a, unit_tangent(a), b), r};
        case SphereRegion::F3: {
            // Fixed path out of A0 through the first basis direction.
            Vector v = planar_field_;
            const double along = dot(v, a.coords());
            for (std::size_t k = 0; k < v.size(); ++k) v[k] -= along * a.coords()[k];
            return {antipodal_arc(a, normalized(v), b), r};
        }
    }
    throw std::logic_error("unreachable sphere region");
}

}  // namespace tcmotion
