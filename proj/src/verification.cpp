#include "tcmotion/verification.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "tcmotion/line_ops.hpp"

namespace tcmotion {

namespace {

double grid_time(int k, int samples) { return samples <= 1 ? 0.0 : static_cast<double>(k) / (samples - 1); }

double piece_min_separation(const Trajectory::Piece& piece) {
    if (const auto* lin = std::get_if<LinearSegment>(&piece.segment)) {
        const Configuration& p = lin->from;
        const Configuration& q = lin->to;
        const int n = p.size();
        const int d = p.dim();
        Vector d0(d), d1(d);
        double best = kInfinity;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                for (int k = 0; k < d; ++k) {
                    d0[k] = p.point(i)[k] - p.point(j)[k];
                    d1[k] = q.point(i)[k] - q.point(j)[k];
                }
                best = std::min(best, segment_min_distance(d0, d1));
            }
        return best;
    }
    return std::min(min_separation(piece.start()), min_separation(piece.end()));
}

double tree_config_min_separation(const Tree& tree, const TreeConfiguration& c) {
    double best = kInfinity;
    for (std::size_t i = 0; i < c.size(); ++i)
        for (std::size_t j = i + 1; j < c.size(); ++j) best = std::min(best, tree_distance(tree, c[i], c[j]));
    return best;
}

double tree_diameter(const Tree& tree, const TreeConfiguration& a, const TreeConfiguration& b) {
    TreeConfiguration all = a;
    all.insert(all.end(), b.begin(), b.end());
    double best = 0.0;
    for (std::size_t i = 0; i < all.size(); ++i)
        for (std::size_t j = i + 1; j < all.size(); ++j) best = std::max(best, tree_distance(tree, all[i], all[j]));
    return best;
}

bool step_touches_vertex(const Tree& tree, const EdgeStep& st, int v) {
    const auto& e = tree.edge(st.edge);
    const bool at_lower = st.s0 == 0.0 || st.s1 == 0.0;
    const bool at_upper = st.s0 == 1.0 || st.s1 == 1.0;
    return (at_lower && e.lower == v) || (at_upper && e.upper == v);
}

bool route_contains(const Tree& tree, const TreeMove& move, const TreePoint& p) {
    for (const auto& st : move.steps()) {
        if (p.is_vertex()) {
            if (step_touches_vertex(tree, st, p.index)) return true;
        } else if (st.edge == p.index && std::min(st.s0, st.s1) <= p.s && p.s <= std::max(st.s0, st.s1)) {
            return true;
        }
    }
    return false;
}

CheckReport finish_report(CheckReport r) {
    const bool endpoints_ok = r.endpoint_error <= 1e-9 * r.scale;
    const bool separated = r.min_separation >= r.separation_tol;
    r.pass = endpoints_ok && separated && r.failure.empty();
    if (!endpoints_ok && r.failure.empty()) r.failure = "endpoint mismatch";
    if (!separated && r.failure.empty()) r.failure = "separation below tolerance";
    return r;
}

CheckReport check_impl(const Trajectory& traj, const Configuration& a, const Configuration& b, int samples,
                       RegionIndex region, Tolerances tol, bool parallel) {
    if (samples < 2) throw std::invalid_argument("need at least 2 samples");
    CheckReport r;
    r.samples = samples;
    r.region = region;
    const double diam = diameter({&a, &b});
    r.scale = std::max(1.0, diam);
    r.separation_tol = tol.sep_abs(diam);
    try {
        r.endpoint_error =
            std::max(max_norm_distance(traj.evaluate(0.0), a), max_norm_distance(traj.evaluate(1.0), b));
    } catch (const std::invalid_argument& e) {
        r.endpoint_error = kInfinity;
        r.failure = e.what();
        return finish_report(r);
    }
    const double sampled =
        parallel ? sampled_min_separation(traj, samples) : sampled_min_separation_serial(traj, samples);
    const double exact = parallel ? exact_piece_min_separation(traj) : exact_piece_min_separation_serial(traj);
    r.min_separation = std::min(sampled, exact);
    return finish_report(r);
}

}  // namespace

double segment_min_distance(std::span<const double> d0, std::span<const double> d1) {
    double dd2 = 0.0, d0dd = 0.0;
    for (std::size_t k = 0; k < d0.size(); ++k) {
        const double dd = d1[k] - d0[k];
        dd2 += dd * dd;
        d0dd += d0[k] * dd;
    }
    const double s = dd2 > 0.0 ? std::clamp(-d0dd / dd2, 0.0, 1.0) : 0.0;
    double sq = 0.0;
    for (std::size_t k = 0; k < d0.size(); ++k) {
        const double x = d0[k] + s * (d1[k] - d0[k]);
        sq += x * x;
    }
    return std::sqrt(sq);
}

double sampled_min_separation(const Trajectory& traj, int samples) {
    double best = kInfinity;
#pragma omp parallel for reduction(min : best) schedule(static)
    for (int k = 0; k < samples; ++k) best = std::min(best, min_separation(traj.evaluate(grid_time(k, samples))));
    return best;
}

double sampled_min_separation_serial(const Trajectory& traj, int samples) {
    double best = kInfinity;
    for (int k = 0; k < samples; ++k) best = std::min(best, min_separation(traj.evaluate(grid_time(k, samples))));
    return best;
}

double exact_piece_min_separation(const Trajectory& traj) {
    const auto pieces = traj.pieces();
    const int count = static_cast<int>(pieces.size());
    double best = kInfinity;
#pragma omp parallel for reduction(min : best) schedule(dynamic)
    for (int i = 0; i < count; ++i) best = std::min(best, piece_min_separation(pieces[i]));
    return best;
}

double exact_piece_min_separation_serial(const Trajectory& traj) {
    double best = kInfinity;
    for (const auto& piece : traj.pieces()) best = std::min(best, piece_min_separation(piece));
    return best;
}

CheckReport check_trajectory(const Trajectory& traj, const Configuration& a, const Configuration& b, int samples,
                             RegionIndex region, Tolerances tol) {
    return check_impl(traj, a, b, samples, region, tol, true);
}

CheckReport check_trajectory_serial(const Trajectory& traj, const Configuration& a, const Configuration& b,
                                    int samples, RegionIndex region, Tolerances tol) {
    return check_impl(traj, a, b, samples, region, tol, false);
}

double tree_sampled_min_separation(const Tree& tree, const TreeTrajectory& traj, int samples) {
    double best = kInfinity;
#pragma omp parallel for reduction(min : best) schedule(static)
    for (int k = 0; k < samples; ++k)
        best = std::min(best, tree_config_min_separation(tree, traj.evaluate(tree, grid_time(k, samples))));
    return best;
}

double tree_sampled_min_separation_serial(const Tree& tree, const TreeTrajectory& traj, int samples) {
    double best = kInfinity;
    for (int k = 0; k < samples; ++k)
        best = std::min(best, tree_config_min_separation(tree, traj.evaluate(tree, grid_time(k, samples))));
    return best;
}

std::string tree_phase_violation(const Tree& tree, const TreeTrajectory& traj) {
    const auto phases = traj.phases();
    for (std::size_t p = 0; p < phases.size(); ++p) {
        const auto& moves = phases[p].moves;
        for (std::size_t i = 0; i < moves.size(); ++i)
            for (std::size_t j = i + 1; j < moves.size(); ++j) {
                const TreeMove& mi = moves[i];
                const TreeMove& mj = moves[j];
                const std::string where =
                    "phase " + std::to_string(p) + ", particles " + std::to_string(i) + " and " + std::to_string(j);
                if (mi.is_static() && mj.is_static()) continue;
                if (mj.is_static()) {
                    if (route_contains(tree, mi, mj.from())) return where + ": moving particle hits a static one";
                } else if (mi.is_static()) {
                    if (route_contains(tree, mj, mi.from())) return where + ": moving particle hits a static one";
                } else if (mi.steps().size() == 1 && mj.steps().size() == 1 &&
                           mi.steps()[0].edge == mj.steps()[0].edge) {
                    const auto& a = mi.steps()[0];
                    const auto& b = mj.steps()[0];
                    if ((a.s0 - b.s0) * (a.s1 - b.s1) <= 0.0) return where + ": order on a shared edge changes";
                }
            }
    }
    return {};
}

CheckReport check_tree_trajectory(const Tree& tree, const TreeTrajectory& traj, const TreeConfiguration& a,
                                  const TreeConfiguration& b, int samples, RegionIndex region, Tolerances tol) {
    if (samples < 2) throw std::invalid_argument("need at least 2 samples");
    CheckReport r;
    r.samples = samples;
    r.region = region;
    const double diam = tree_diameter(tree, a, b);
    r.scale = std::max(1.0, diam);
    r.separation_tol = tol.sep_abs(diam);
    const auto start = traj.evaluate(tree, 0.0);
    const auto end = traj.evaluate(tree, 1.0);
    if (start.size() != a.size() || end.size() != b.size()) {
        r.endpoint_error = kInfinity;
        r.failure = "particle count mismatch";
        return finish_report(r);
    }
    for (std::size_t i = 0; i < a.size(); ++i) {
        r.endpoint_error = std::max(r.endpoint_error, tree_distance(tree, start[i], a[i]));
        r.endpoint_error = std::max(r.endpoint_error, tree_distance(tree, end[i], b[i]));
    }
    r.min_separation = tree_sampled_min_separation(tree, traj, samples);
    r.failure = tree_phase_violation(tree, traj);
    return finish_report(r);
}

std::vector<CheckReport> check_batch(int trials, const std::function<CheckReport(int)>& trial) {
    std::vector<CheckReport> out(static_cast<std::size_t>(std::max(trials, 0)));
#pragma omp parallel for schedule(dynamic)
    for (int i = 0; i < trials; ++i) out[i] = trial(i);
    return out;
}

std::vector<CheckReport> check_batch_serial(int trials, const std::function<CheckReport(int)>& trial) {
    std::vector<CheckReport> out;
    out.reserve(static_cast<std::size_t>(std::max(trials, 0)));
    for (int i = 0; i < trials; ++i) out.push_back(trial(i));
    return out;
}

long RegionHistogram::total() const {
    long sum = 0;
    for (const auto& [label, count] : counts) sum += count;
    return sum;
}

bool RegionHistogram::labels_in_range() const {
    return std::all_of(counts.begin(), counts.end(),
                       [&](const auto& kv) { return kv.first >= min_label && kv.first <= max_label; });
}

RegionHistogram check_partition(int samples, int min_label, int max_label, const std::function<int(int)>& label) {
    if (samples < 1) throw std::invalid_argument("need at least one sample");
    RegionHistogram h;
    h.min_label = min_label;
    h.max_label = max_label;
    for (int i = 0; i < samples; ++i) ++h.counts[label(i)];
    return h;
}

double ProbeReport::max_deviation() const {
    return deviations.empty() ? 0.0 : *std::max_element(deviations.begin(), deviations.end());
}

double ProbeReport::fraction_within(double bound) const {
    if (deviations.empty()) return 0.0;
    const auto ok = std::count_if(deviations.begin(), deviations.end(), [&](double d) { return d <= bound; });
    return static_cast<double>(ok) / static_cast<double>(deviations.size());
}

namespace {

/// Cluster id of each value under single linkage with the given tolerance.
std::vector<int> cluster_ids(const std::vector<double>& values, double tol) {
    std::vector<int> order(values.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) { return values[a] < values[b]; });
    std::vector<int> id(values.size());
    int current = 0;
    for (std::size_t k = 0; k < order.size(); ++k) {
        if (k > 0 && values[order[k]] - values[order[k - 1]] > tol) ++current;
        id[order[k]] = current;
    }
    return id;
}

/// Moves each first-axis cluster rigidly along the axis and jitters the remaining coordinates.
Configuration perturb_keeping_cp(const Configuration& c, double delta, double tol, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(-delta, delta);
    std::vector<double> axis(c.size());
    for (int i = 0; i < c.size(); ++i) axis[i] = c.point(i)[0];
    const auto ids = cluster_ids(axis, tol);
    std::vector<double> shift(c.size());
    for (double& s : shift) s = u(rng);
    std::vector<double> coords = c.coords();
    for (int i = 0; i < c.size(); ++i) {
        coords[static_cast<std::size_t>(i) * c.dim()] += shift[ids[i]];
        for (int k = 1; k < c.dim(); ++k) coords[static_cast<std::size_t>(i) * c.dim() + k] += u(rng);
    }
    return Configuration::unchecked(c.dim(), std::move(coords));
}

/// Small rigid motion: rotation by at most delta in a random plane, then a translation of size at most delta.
Configuration perturb_rigidly(const Configuration& c, double delta, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(-delta, delta);
    const Vector a = random_unit_vector(c.dim(), rng);
    Vector w = random_unit_vector(c.dim(), rng);
    const double along = dot(a, w);
    for (std::size_t k = 0; k < w.size(); ++k) w[k] -= along * a[k];
    const double wn = norm(w);
    Configuration moved = c;
    if (wn > 1e-6) {
        for (double& x : w) x /= wn;
        moved = rotate_configuration(c, Vector(c.dim(), 0.0), a, w, u(rng));
    }
    std::vector<double> coords = moved.coords();
    Vector shift(c.dim());
    for (double& s : shift) s = u(rng);
    for (std::size_t k = 0; k < coords.size(); ++k) coords[k] += shift[k % c.dim()];
    return Configuration::unchecked(c.dim(), std::move(coords));
}

}  // namespace

ProbeReport probe_euclid(const EuclidPlanner& planner, const Configuration& a, const Configuration& b, double delta,
                         int trials, std::mt19937_64& rng, int samples) {
    const PlanResult base = planner.plan(a, b);
    const double tol_a = planner.tolerances().proj_eq_abs(diameter(a));
    const double tol_b = planner.tolerances().proj_eq_abs(diameter(b));
    return continuity_probe(trials, rng, [&](std::mt19937_64& g) -> std::optional<double> {
        const Configuration a2 = perturb_keeping_cp(a, delta, tol_a, g);
        const Configuration b2 = perturb_keeping_cp(b, delta, tol_b, g);
        if (!a2.is_valid() || !b2.is_valid()) return std::nullopt;
        if (planner.cp(a2) != planner.cp(a) || planner.cp(b2) != planner.cp(b)) return std::nullopt;
        return sup_distance(base.trajectory, planner.plan(a2, b2).trajectory, samples);
    });
}

ProbeReport probe_even(const EvenPlanner& planner, const Configuration& a, const Configuration& b, double delta,
                       int trials, std::mt19937_64& rng, int samples) {
    const PlanResult base = planner.plan(a, b);
    const PairClass cls = planner.classify(a, b);
    auto perturb = [&](const Configuration& c, std::mt19937_64& g) {
        if (planner.cp_dirline(c) == c.size()) {
            std::uniform_real_distribution<double> u(-delta, delta);
            std::vector<double> coords = c.coords();
            for (double& x : coords) x += u(g);
            return Configuration::unchecked(c.dim(), std::move(coords));
        }
        return perturb_rigidly(c, delta, g);
    };
    return continuity_probe(trials, rng, [&](std::mt19937_64& g) -> std::optional<double> {
        const Configuration a2 = perturb(a, g);
        const Configuration b2 = perturb(b, g);
        if (!a2.is_valid() || !b2.is_valid()) return std::nullopt;
        if (!(planner.classify(a2, b2) == cls)) return std::nullopt;
        return sup_distance(base.trajectory, planner.plan(a2, b2).trajectory, samples);
    });
}

ProbeReport probe_sphere(const SpherePlanner& planner, const SpherePoint& a, const SpherePoint& b, double delta,
                         int trials, std::mt19937_64& rng, int samples) {
    const SpherePlan base = planner.plan(a, b);
    auto jitter = [&](const SpherePoint& p, std::mt19937_64& g) {
        std::uniform_real_distribution<double> u(-delta, delta);
        Vector v = p.coords();
        for (double& x : v) x += u(g);
        return SpherePoint::from_direction(v);
    };
    return continuity_probe(trials, rng, [&](std::mt19937_64& g) -> std::optional<double> {
        const SpherePoint a2 = jitter(a, g);
        std::optional<SpherePoint> b2;
        if (base.region == SphereRegion::F1) {
            b2 = jitter(b, g);
        } else {
            Vector minus = a2.coords();
            for (double& x : minus) x = -x;
            b2 = SpherePoint(minus);
        }
        if (planner.region(a2, *b2) != base.region) return std::nullopt;
        return sup_distance(base.trajectory, planner.plan(a2, *b2).trajectory, samples);
    });
}

ProbeReport probe_tree(const TreePlanner& planner, const TreeConfiguration& a, const TreeConfiguration& b,
                       double delta, int trials, std::mt19937_64& rng, int samples) {
    const Tree& tree = planner.tree();
    const TreePlanResult base = planner.plan(a, b);
    auto jitter = [&](const TreeConfiguration& c, std::mt19937_64& g) -> std::optional<TreeConfiguration> {
        std::uniform_real_distribution<double> u(-delta, delta);
        TreeConfiguration out = c;
        for (auto& p : out) {
            if (p.is_vertex()) continue;
            p.s += u(g) / tree.edge(p.index).length;
            if (p.s <= 0.0 || p.s >= 1.0) return std::nullopt;
        }
        for (std::size_t i = 0; i < c.size(); ++i)
            for (std::size_t j = i + 1; j < c.size(); ++j)
                if (!c[i].is_vertex() && !c[j].is_vertex() && c[i].index == c[j].index &&
                    (c[i].s < c[j].s) != (out[i].s < out[j].s))
                    return std::nullopt;
        if (!is_valid(tree, out)) return std::nullopt;
        return out;
    };
    return continuity_probe(trials, rng, [&](std::mt19937_64& g) -> std::optional<double> {
        const auto a2 = jitter(a, g);
        const auto b2 = jitter(b, g);
        if (!a2 || !b2) return std::nullopt;
        if (planner.region_index(*a2, *b2) != base.region) return std::nullopt;
        return sup_distance(tree, base.trajectory, planner.plan(*a2, *b2).trajectory, samples);
    });
}

namespace {

/// `count` values in [lo, hi] that differ pairwise and from every value in `fixed` by at least gap.
std::vector<double> spread_values(int count, double lo, double hi, double gap, const std::vector<double>& fixed,
                                  std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(lo, hi);
    std::vector<double> out;
    while (static_cast<int>(out.size()) < count) {
        const double x = u(rng);
        auto far = [&](double y) { return std::abs(x - y) >= gap; };
        if (std::all_of(out.begin(), out.end(), far) && std::all_of(fixed.begin(), fixed.end(), far))
            out.push_back(x);
    }
    return out;
}

constexpr double kGap = 1e-3;

}  // namespace

Configuration random_configuration_with_cp(int dim, int n, int cp, std::mt19937_64& rng) {
    if (n < 1 || cp < 1 || cp > n) throw std::invalid_argument("need 1 <= cp <= n");
    if (dim < 2 && cp < n) throw std::invalid_argument("coincident projections need dimension >= 2");
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (;;) {
        const auto values = spread_values(cp, -1.0, 1.0, kGap, {}, rng);
        std::vector<int> cluster(n);
        for (int i = 0; i < n; ++i) cluster[i] = i < cp ? i : std::uniform_int_distribution<int>(0, cp - 1)(rng);
        std::shuffle(cluster.begin(), cluster.end(), rng);
        std::vector<double> coords(static_cast<std::size_t>(n) * dim);
        for (int i = 0; i < n; ++i) {
            coords[static_cast<std::size_t>(i) * dim] = values[cluster[i]];
            for (int k = 1; k < dim; ++k) coords[static_cast<std::size_t>(i) * dim + k] = u(rng);
        }
        auto c = Configuration::unchecked(dim, std::move(coords));
        if (min_separation(c) >= kGap) return c;
    }
}

Configuration random_configuration(int dim, int n, std::mt19937_64& rng) {
    return random_configuration_with_cp(dim, n, n, rng);
}

Vector random_unit_vector(int dim, std::mt19937_64& rng) {
    std::normal_distribution<double> g;
    for (;;) {
        Vector v(dim);
        for (double& x : v) x = g(rng);
        if (norm(v) > 1e-3) return normalized(v);
    }
}

Configuration random_configuration_with_dirline_cp(int dim, int n, int cp, std::span<const double> dir,
                                                   std::mt19937_64& rng) {
    if (n < 2 || cp < 2 || cp > n) throw std::invalid_argument("need 2 <= cp <= n");
    if (static_cast<int>(dir.size()) != dim || std::abs(norm(dir) - 1.0) > 1e-12)
        throw std::invalid_argument("direction must be a unit vector of the configuration dimension");
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::uniform_real_distribution<double> reach(0.3, 1.0);
    for (;;) {
        Vector z1(dim);
        for (double& x : z1) x = u(rng);
        const double r = reach(rng);
        auto values = spread_values(cp - 2, -1.0, 1.5, kGap, {0.0, r}, rng);
        values.push_back(0.0);
        values.push_back(r);
        std::vector<int> cluster(n - 2);
        for (int i = 0; i < n - 2; ++i)
            cluster[i] = i < cp - 2 ? i : std::uniform_int_distribution<int>(0, cp - 1)(rng);
        std::shuffle(cluster.begin(), cluster.end(), rng);

        std::vector<Vector> pts{z1, z1};
        for (int k = 0; k < dim; ++k) pts[1][k] += r * dir[k];
        for (int i = 0; i < n - 2; ++i) {
            Vector off(dim);
            for (double& x : off) x = u(rng);
            const double along = dot(off, dir);
            Vector p(dim);
            for (int k = 0; k < dim; ++k) p[k] = z1[k] + values[cluster[i]] * dir[k] + off[k] - along * dir[k];
            pts.push_back(std::move(p));
        }
        auto c = Configuration::unchecked(dim, [&] {
            std::vector<double> flat;
            for (const auto& p : pts) flat.insert(flat.end(), p.begin(), p.end());
            return flat;
        }());
        if (min_separation(c) >= kGap) return c;
    }
}

SpherePoint random_sphere_point(int ambient_dim, std::mt19937_64& rng) {
    return SpherePoint(random_unit_vector(ambient_dim, rng));
}

TreeConfiguration random_tree_configuration(const Tree& tree, int n, int at_essential, std::mt19937_64& rng) {
    auto essential = tree.essential_vertices();
    if (at_essential < 0 || at_essential > n || at_essential > static_cast<int>(essential.size()))
        throw std::invalid_argument("cannot place that many points on essential vertices");
    std::uniform_int_distribution<int> edge(0, tree.num_edges() - 1);
    std::uniform_real_distribution<double> s(0.05, 0.95);
    for (;;) {
        std::shuffle(essential.begin(), essential.end(), rng);
        TreeConfiguration c;
        for (int i = 0; i < at_essential; ++i) c.push_back(TreePoint::vertex(essential[i]));
        while (static_cast<int>(c.size()) < n) c.push_back(TreePoint::on_edge(edge(rng), s(rng)));
        std::shuffle(c.begin(), c.end(), rng);
        if (is_valid(tree, c) && min_separation(tree, c) >= kGap) return c;
    }
}

}  // namespace tcmotion
