/**
 * Closed-form piecewise trajectories of configurations on [0, 1].
 *
 * A trajectory is a list of analytic segments, each occupying a subinterval
 * of the unit time interval. Nothing is pre-sampled; callers evaluate at any
 * resolution they need.
 */
#pragma once

#include <span>
#include <variant>
#include <vector>

#include "tcmotion/geometry.hpp"

namespace tcmotion {

/// Straight-line interpolation of every point.
struct LinearSegment {
    Configuration from;
    Configuration to;
};

/**
 * Rigid rotation of a configuration about `pivot` in the oriented plane
 * spanned by the orthonormal pair (u, w), from angle 0 to `angle`.
 * The identity is applied on the orthogonal complement of that plane.
 */
struct RotationSegment {
    Configuration from;
    Vector pivot;
    Vector u;
    Vector w;
    double angle = 0.0;
    Configuration to;  // rotation of `from` by `angle`
};

/**
 * Great-circle arc for a single point on the unit sphere:
 * x(s) = normalize(cos(angle s) a + sin(angle s) w + s * blend), with a, w
 * orthonormal. `blend` absorbs a sub-tolerance mismatch between the arc end and
 * the requested endpoint so that the endpoint is hit exactly.
 */
struct ArcSegment {
    Configuration from;
    Vector w;
    double angle = 0.0;
    Vector blend;
    Configuration to;
};

using Segment = std::variant<LinearSegment, RotationSegment, ArcSegment>;

const Configuration& segment_start(const Segment& s);
const Configuration& segment_end(const Segment& s);
/// Evaluate a segment at local parameter s in [0, 1]; s = 0 and s = 1 return the stored endpoints.
Configuration evaluate_segment(const Segment& seg, double s);
RotationSegment make_rotation(const Configuration& from, Vector pivot, Vector u, Vector w, double angle);
Configuration rotate_configuration(const Configuration& c, std::span<const double> pivot, std::span<const double> u,
                                   std::span<const double> w, double angle);

class Trajectory {
public:
    struct Piece {
        double t0 = 0.0;
        double t1 = 1.0;
        Segment segment;
        bool reversed = false;

        const Configuration& start() const { return reversed ? segment_end(segment) : segment_start(segment); }
        const Configuration& end() const { return reversed ? segment_start(segment) : segment_end(segment); }
        Configuration at_local(double s) const { return evaluate_segment(segment, reversed ? 1.0 - s : s); }
    };

    static Trajectory constant(const Configuration& c);
    static Trajectory from_segment(Segment seg);

    /// Configuration at time t in [0, 1]; throws std::out_of_range otherwise.
    Configuration evaluate(double t) const;

    Trajectory reversed() const;

    const Configuration& start() const { return pieces_.front().start(); }
    const Configuration& end() const { return pieces_.back().end(); }
    std::span<const Piece> pieces() const { return pieces_; }
    int num_points() const { return start().size(); }
    int dim() const { return start().dim(); }

private:
    friend Trajectory concatenate(std::span<const Trajectory> parts, double junction_tol);
    std::vector<Piece> pieces_;
};

/// Straight-line motion z_i(t) = (1 - t) z_i + t z'_i. Collision-freeness is the caller's concern.
Trajectory linear_move(const Configuration& from, const Configuration& to);

/**
 * Joins trajectories end to start, giving each part an equal share of [0, 1].
 * Throws std::invalid_argument naming the first junction whose max-norm
 * mismatch exceeds junction_tol (scaled by max(1, coordinate magnitude)).
 */
Trajectory concatenate(std::span<const Trajectory> parts, double junction_tol = 1e-9);
Trajectory concatenate(std::initializer_list<Trajectory> parts, double junction_tol = 1e-9);

/// Trajectory evaluated at `samples` uniform times 0, 1/(samples-1), ..., 1.
std::vector<Configuration> sample(const Trajectory& traj, int samples);

/// sup over uniform sample times of the max-norm distance between two trajectories.
double sup_distance(const Trajectory& a, const Trajectory& b, int samples);

}  // namespace tcmotion
