#include "tcmotion/trajectory.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace tcmotion {

namespace {

struct StartVisitor {
    const Configuration& operator()(const LinearSegment& s) const { return s.from; }
    const Configuration& operator()(const RotationSegment& s) const { return s.from; }
    const Configuration& operator()(const ArcSegment& s) const { return s.from; }
};

struct EndVisitor {
    const Configuration& operator()(const LinearSegment& s) const { return s.to; }
    const Configuration& operator()(const RotationSegment& s) const { return s.to; }
    const Configuration& operator()(const ArcSegment& s) const { return s.to; }
};

Configuration lerp(const Configuration& a, const Configuration& b, double s) {
    std::vector<double> out(a.coords().size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = (1.0 - s) * a.coords()[i] + s * b.coords()[i];
    return Configuration::unchecked(a.dim(), std::move(out));
}

Configuration arc_at(const ArcSegment& seg, double s) {
    const auto a = seg.from.point(0);
    const double c = std::cos(seg.angle * s);
    const double sn = std::sin(seg.angle * s);
    Vector x(a.size());
    for (std::size_t i = 0; i < x.size(); ++i) x[i] = c * a[i] + sn * seg.w[i] + s * seg.blend[i];
    const double len = norm(x);
    for (double& xi : x) xi /= len;
    return Configuration::unchecked(seg.from.dim(), std::move(x));
}

}  // namespace

const Configuration& segment_start(const Segment& s) { return std::visit(StartVisitor{}, s); }
const Configuration& segment_end(const Segment& s) { return std::visit(EndVisitor{}, s); }

Configuration rotate_configuration(const Configuration& c, std::span<const double> pivot, std::span<const double> u,
                                   std::span<const double> w, double angle) {
    const double cs = std::cos(angle) - 1.0;
    const double sn = std::sin(angle);
    const int d = c.dim();
    std::vector<double> out(c.coords());
    Vector rel(static_cast<std::size_t>(d));
    for (int i = 0; i < c.size(); ++i) {
        auto p = c.point(i);
        for (int k = 0; k < d; ++k) rel[k] = p[k] - pivot[k];
        const double xu = dot(rel, u);
        const double xw = dot(rel, w);
        for (int k = 0; k < d; ++k)
            out[static_cast<std::size_t>(i) * d + k] = p[k] + cs * (xu * u[k] + xw * w[k]) + sn * (xu * w[k] - xw * u[k]);
    }
    return Configuration::unchecked(d, std::move(out));
}

RotationSegment make_rotation(const Configuration& from, Vector pivot, Vector u, Vector w, double angle) {
    RotationSegment seg{from, std::move(pivot), std::move(u), std::move(w), angle, {}};
    seg.to = rotate_configuration(from, seg.pivot, seg.u, seg.w, angle);
    return seg;
}

Configuration evaluate_segment(const Segment& seg, double s) {
    if (s <= 0.0) return segment_start(seg);
    if (s >= 1.0) return segment_end(seg);
    if (const auto* lin = std::get_if<LinearSegment>(&seg)) return lerp(lin->from, lin->to, s);
    if (const auto* rot = std::get_if<RotationSegment>(&seg))
        return rotate_configuration(rot->from, rot->pivot, rot->u, rot->w, rot->angle * s);
    return arc_at(std::get<ArcSegment>(seg), s);
}

Trajectory Trajectory::constant(const Configuration& c) { return from_segment(LinearSegment{c, c}); }

Trajectory Trajectory::from_segment(Segment seg) {
    Trajectory t;
    t.pieces_.push_back(Piece{0.0, 1.0, std::move(seg), false});
    return t;
}

Configuration Trajectory::evaluate(double t) const {
    if (!(t >= 0.0 && t <= 1.0)) throw std::out_of_range("trajectory time must lie in [0, 1], got " + std::to_string(t));
    if (t == 0.0) return start();
    if (t == 1.0) return end();
    auto it = std::lower_bound(pieces_.begin(), pieces_.end(), t, [](const Piece& p, double v) { return p.t1 < v; });
    if (it == pieces_.end()) it = std::prev(pieces_.end());
    const double span = it->t1 - it->t0;
    const double s = span > 0.0 ? std::clamp((t - it->t0) / span, 0.0, 1.0) : 1.0;
    return it->at_local(s);
}

Trajectory Trajectory::reversed() const {
    Trajectory r;
    r.pieces_.reserve(pieces_.size());
    for (auto it = pieces_.rbegin(); it != pieces_.rend(); ++it)
        r.pieces_.push_back(Piece{1.0 - it->t1, 1.0 - it->t0, it->segment, !it->reversed});
    if (!r.pieces_.empty()) {
        r.pieces_.front().t0 = 0.0;
        r.pieces_.back().t1 = 1.0;
    }
    return r;
}

Trajectory linear_move(const Configuration& from, const Configuration& to) {
    require_same_shape(from, to);
    return Trajectory::from_segment(LinearSegment{from, to});
}

Trajectory concatenate(std::span<const Trajectory> parts, double junction_tol) {
    if (parts.empty()) throw std::invalid_argument("concatenate needs at least one part");
    for (std::size_t i = 0; i + 1 < parts.size(); ++i) {
        const Configuration& a = parts[i].end();
        const Configuration& b = parts[i + 1].start();
        require_same_shape(a, b);
        double scale = 1.0;
        for (double x : a.coords()) scale = std::max(scale, std::abs(x));
        if (max_norm_distance(a, b) > junction_tol * scale)
            throw std::invalid_argument("junction " + std::to_string(i) + " mismatch: parts do not meet");
    }
    Trajectory out;
    const double k = static_cast<double>(parts.size());
    for (std::size_t i = 0; i < parts.size(); ++i) {
        const double base = static_cast<double>(i) / k;
        for (const auto& p : parts[i].pieces())
            out.pieces_.push_back(Trajectory::Piece{base + p.t0 / k, base + p.t1 / k, p.segment, p.reversed});
    }
    out.pieces_.front().t0 = 0.0;
    out.pieces_.back().t1 = 1.0;
    return out;
}

Trajectory concatenate(std::initializer_list<Trajectory> parts, double junction_tol) {
    return concatenate(std::span<const Trajectory>(parts.begin(), parts.size()), junction_tol);
}

std::vector<Configuration> sample(const Trajectory& traj, int samples) {
    if (samples < 2) throw std::invalid_argument("need at least two samples");
    std::vector<Configuration> out;
    out.reserve(static_cast<std::size_t>(samples));
    for (int i = 0; i < samples; ++i) out.push_back(traj.evaluate(i == samples - 1 ? 1.0 : double(i) / (samples - 1)));
    return out;
}

double sup_distance(const Trajectory& a, const Trajectory& b, int samples) {
    double best = 0.0;
    for (int i = 0; i < samples; ++i) {
        const double t = i == samples - 1 ? 1.0 : double(i) / (samples - 1);
        best = std::max(best, max_norm_distance(a.evaluate(t), b.evaluate(t)));
    }
    return best;
}

}  // namespace tcmotion
