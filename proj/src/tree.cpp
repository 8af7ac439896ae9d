#include "tcmotion/tree.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <stdexcept>
#include <string>

namespace tcmotion {

Tree::Tree(std::vector<int> vertex_ids, const std::vector<std::pair<int, int>>& edges, int root_id,
           std::vector<double> lengths)
    : ids_(std::move(vertex_ids)) {
    const int nv = num_vertices();
    if (nv < 2) throw std::invalid_argument("tree needs at least two vertices");
    {
        auto sorted = ids_;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw std::invalid_argument("duplicate vertex id");
    }
    if (static_cast<int>(edges.size()) != nv - 1)
        throw std::invalid_argument("a tree on " + std::to_string(nv) + " vertices needs " + std::to_string(nv - 1) +
                                    " edges, got " + std::to_string(edges.size()));
    if (lengths.empty()) lengths.assign(edges.size(), 1.0);
    if (lengths.size() != edges.size()) throw std::invalid_argument("one length per edge required");

    incident_.assign(static_cast<std::size_t>(nv), {});
    std::vector<std::pair<int, int>> ends;
    for (std::size_t e = 0; e < edges.size(); ++e) {
        const int u = index_of(edges[e].first);
        const int v = index_of(edges[e].second);
        if (u == v) throw std::invalid_argument("self loop at vertex " + std::to_string(edges[e].first));
        if (!(lengths[e] > 0.0) || !std::isfinite(lengths[e]))
            throw std::invalid_argument("edge lengths must be positive");
        ends.emplace_back(u, v);
        incident_[u].push_back(static_cast<int>(e));
        incident_[v].push_back(static_cast<int>(e));
    }

    root_ = index_of(root_id);
    if (degree(root_) != 1) throw std::invalid_argument("root vertex must be univalent");

    edges_.assign(edges.size(), TreeEdge{});
    descending_.assign(static_cast<std::size_t>(nv), -2);
    depth_.assign(static_cast<std::size_t>(nv), 0.0);
    level_.assign(static_cast<std::size_t>(nv), 0);
    descending_[root_] = -1;
    std::deque<int> queue{root_};
    int visited = 1;
    while (!queue.empty()) {
        const int u = queue.front();
        queue.pop_front();
        for (int e : incident_[u]) {
            const int v = ends[e].first == u ? ends[e].second : ends[e].first;
            if (e == descending_[u]) continue;
            if (descending_[v] != -2) throw std::invalid_argument("graph contains a cycle");
            edges_[e] = TreeEdge{u, v, lengths[e]};
            descending_[v] = e;
            depth_[v] = depth_[u] + lengths[e];
            level_[v] = level_[u] + 1;
            ++visited;
            queue.push_back(v);
        }
    }
    if (visited != nv) throw std::invalid_argument("graph is not connected");
    root_child_ = edges_[incident_[root_][0]].upper;
}

int Tree::index_of(int id) const {
    const auto it = std::find(ids_.begin(), ids_.end(), id);
    if (it == ids_.end()) throw std::invalid_argument("unknown vertex id " + std::to_string(id));
    return static_cast<int>(it - ids_.begin());
}

int Tree::edge_between(int u, int v) const {
    for (int e : incident_[u])
        if ((edges_[e].lower == u && edges_[e].upper == v) || (edges_[e].lower == v && edges_[e].upper == u)) return e;
    return -1;
}

double Tree::total_length() const {
    double sum = 0.0;
    for (const auto& e : edges_) sum += e.length;
    return sum;
}

std::vector<int> Tree::essential_vertices() const {
    std::vector<int> out;
    for (int v = 0; v < num_vertices(); ++v)
        if (is_essential(v)) out.push_back(v);
    return out;
}

int Tree::essential_count() const { return static_cast<int>(essential_vertices().size()); }

bool Tree::is_ancestor_or_self(int a, int b) const {
    while (level_[b] > level_[a]) b = parent(b);
    return a == b;
}

int Tree::lowest_common_ancestor(int a, int b) const {
    while (level_[a] > level_[b]) a = parent(a);
    while (level_[b] > level_[a]) b = parent(b);
    while (a != b) {
        a = parent(a);
        b = parent(b);
    }
    return a;
}

std::vector<int> Tree::vertex_path(int a, int b) const {
    const int top = lowest_common_ancestor(a, b);
    std::vector<int> up;
    for (int v = a; v != top; v = parent(v)) up.push_back(v);
    up.push_back(top);
    std::vector<int> down;
    for (int v = b; v != top; v = parent(v)) down.push_back(v);
    up.insert(up.end(), down.rbegin(), down.rend());
    return up;
}

std::vector<std::pair<int, int>> Tree::edge_id_pairs() const {
    std::vector<std::pair<int, int>> out;
    for (const auto& e : edges_) out.emplace_back(ids_[e.lower], ids_[e.upper]);
    return out;
}

std::vector<double> Tree::lengths() const {
    std::vector<double> out;
    for (const auto& e : edges_) out.push_back(e.length);
    return out;
}

TreePoint TreePoint::on_edge(int e, double s) {
    if (!(s > 0.0 && s < 1.0)) throw std::invalid_argument("edge coordinate must lie strictly inside (0, 1)");
    return {Kind::Edge, e, s};
}

TreePoint TreePoint::at(const Tree& tree, int e, double s) {
    if (s <= 0.0) return vertex(tree.edge(e).lower);
    if (s >= 1.0) return vertex(tree.edge(e).upper);
    return {Kind::Edge, e, s};
}

double depth(const Tree& tree, const TreePoint& p) {
    if (p.is_vertex()) return tree.depth(p.index);
    const auto& e = tree.edge(p.index);
    return tree.depth(e.lower) + p.s * e.length;
}

namespace {

struct Exit {
    int vertex;
    double cost;
};

std::vector<Exit> exits(const Tree& tree, const TreePoint& p) {
    if (p.is_vertex()) return {{p.index, 0.0}};
    const auto& e = tree.edge(p.index);
    return {{e.lower, p.s * e.length}, {e.upper, (1.0 - p.s) * e.length}};
}

double vertex_distance(const Tree& tree, int a, int b) {
    return tree.depth(a) + tree.depth(b) - 2.0 * tree.depth(tree.lowest_common_ancestor(a, b));
}

int lower_vertex(const Tree& tree, const TreePoint& p) { return p.is_vertex() ? p.index : tree.edge(p.index).lower; }

}  // namespace

double tree_distance(const Tree& tree, const TreePoint& x, const TreePoint& y) {
    if (!x.is_vertex() && !y.is_vertex() && x.index == y.index)
        return std::abs(x.s - y.s) * tree.edge(x.index).length;
    double best = std::numeric_limits<double>::infinity();
    for (const auto& a : exits(tree, x))
        for (const auto& b : exits(tree, y)) best = std::min(best, a.cost + vertex_distance(tree, a.vertex, b.vertex) + b.cost);
    return best;
}

bool partial_geq(const Tree& tree, const TreePoint& x, const TreePoint& y) {
    if (y.is_vertex()) return tree.is_ancestor_or_self(y.index, lower_vertex(tree, x));
    if (!x.is_vertex() && x.index == y.index) return x.s >= y.s;
    return tree.is_ancestor_or_self(tree.edge(y.index).upper, lower_vertex(tree, x));
}

void validate(const Tree& tree, const TreeConfiguration& c) {
    if (c.empty()) throw std::invalid_argument("tree configuration needs at least one point");
    for (const auto& p : c) {
        if (p.is_vertex()) {
            if (p.index < 0 || p.index >= tree.num_vertices()) throw std::invalid_argument("vertex index out of range");
        } else {
            if (p.index < 0 || p.index >= tree.num_edges()) throw std::invalid_argument("edge index out of range");
            if (!(p.s > 0.0 && p.s < 1.0)) throw std::invalid_argument("edge coordinate must lie in (0, 1)");
        }
    }
    for (std::size_t i = 0; i < c.size(); ++i)
        for (std::size_t j = i + 1; j < c.size(); ++j)
            if (c[i] == c[j]) throw std::invalid_argument("tree configuration points must be distinct");
}

bool is_valid(const Tree& tree, const TreeConfiguration& c) {
    try {
        validate(tree, c);
        return true;
    } catch (const std::invalid_argument&) {
        return false;
    }
}

double min_separation(const Tree& tree, const TreeConfiguration& c) {
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < c.size(); ++i)
        for (std::size_t j = i + 1; j < c.size(); ++j) best = std::min(best, tree_distance(tree, c[i], c[j]));
    return best;
}

bool same_point(const TreePoint& a, const TreePoint& b, double s_tol) {
    if (a.kind != b.kind || a.index != b.index) return false;
    return a.is_vertex() || std::abs(a.s - b.s) <= s_tol;
}

TreeMove::TreeMove(const Tree& tree, const TreePoint& from, const TreePoint& to) : from_(from), to_(to) {
    if (from == to) return;
    if (!from.is_vertex() && !to.is_vertex() && from.index == to.index) {
        steps_.push_back({from.index, from.s, to.s});
    } else {
        const auto from_exits = exits(tree, from);
        const auto to_exits = exits(tree, to);
        double best = std::numeric_limits<double>::infinity();
        Exit a{}, b{};
        for (const auto& x : from_exits)
            for (const auto& y : to_exits) {
                const double cost = x.cost + vertex_distance(tree, x.vertex, y.vertex) + y.cost;
                if (cost < best) {
                    best = cost;
                    a = x;
                    b = y;
                }
            }
        if (!from.is_vertex()) {
            const auto& e = tree.edge(from.index);
            steps_.push_back({from.index, from.s, a.vertex == e.lower ? 0.0 : 1.0});
        }
        const auto path = tree.vertex_path(a.vertex, b.vertex);
        for (std::size_t i = 0; i + 1 < path.size(); ++i) {
            const int e = tree.edge_between(path[i], path[i + 1]);
            const bool upward = tree.edge(e).lower == path[i];
            steps_.push_back({e, upward ? 0.0 : 1.0, upward ? 1.0 : 0.0});
        }
        if (!to.is_vertex()) {
            const auto& e = tree.edge(to.index);
            steps_.push_back({to.index, b.vertex == e.lower ? 0.0 : 1.0, to.s});
        }
    }
    double acc = 0.0;
    for (const auto& st : steps_) {
        acc += std::abs(st.s1 - st.s0) * tree.edge(st.edge).length;
        cumulative_.push_back(acc);
    }
    length_ = acc;
}

TreePoint TreeMove::at(const Tree& tree, double lambda) const {
    if (steps_.empty() || lambda <= 0.0) return from_;
    if (lambda >= 1.0) return to_;
    const double target = lambda * length_;
    std::size_t i = 0;
    while (i + 1 < steps_.size() && cumulative_[i] < target) ++i;
    const double start = i == 0 ? 0.0 : cumulative_[i - 1];
    const double span = cumulative_[i] - start;
    const double frac = span > 0.0 ? std::clamp((target - start) / span, 0.0, 1.0) : 1.0;
    const auto& st = steps_[i];
    return TreePoint::at(tree, st.edge, st.s0 + (st.s1 - st.s0) * frac);
}

TreeMove TreeMove::reversed() const {
    TreeMove r;
    r.from_ = to_;
    r.to_ = from_;
    double acc = 0.0;
    for (auto it = steps_.rbegin(); it != steps_.rend(); ++it) {
        r.steps_.push_back({it->edge, it->s1, it->s0});
        const std::size_t idx = static_cast<std::size_t>(it - steps_.rbegin());
        const std::size_t orig = steps_.size() - 1 - idx;
        const double seg = cumulative_[orig] - (orig == 0 ? 0.0 : cumulative_[orig - 1]);
        acc += seg;
        r.cumulative_.push_back(acc);
    }
    r.length_ = length_;
    return r;
}

TreeTrajectory TreeTrajectory::constant(const Tree& tree, const TreeConfiguration& c) {
    std::vector<TreeMove> moves;
    for (const auto& p : c) moves.emplace_back(tree, p, p);
    return from_phases(tree, {std::move(moves)});
}

TreeTrajectory TreeTrajectory::from_phases(const Tree& tree, std::vector<std::vector<TreeMove>> phases) {
    (void)tree;
    if (phases.empty()) throw std::invalid_argument("tree trajectory needs at least one phase");
    TreeTrajectory out;
    const double k = static_cast<double>(phases.size());
    for (std::size_t i = 0; i < phases.size(); ++i) {
        if (i > 0) {
            const auto& prev = out.phases_.back().moves;
            if (phases[i].size() != prev.size()) throw std::invalid_argument("phase particle count mismatch");
            for (std::size_t p = 0; p < phases[i].size(); ++p)
                if (!same_point(prev[p].to(), phases[i][p].from()))
                    throw std::invalid_argument("phase " + std::to_string(i) + " does not start where the previous ended");
        }
        out.phases_.push_back({double(i) / k, i + 1 == phases.size() ? 1.0 : double(i + 1) / k, std::move(phases[i])});
    }
    for (const auto& m : out.phases_.front().moves) out.start_.push_back(m.from());
    for (const auto& m : out.phases_.back().moves) out.end_.push_back(m.to());
    return out;
}

TreeConfiguration TreeTrajectory::evaluate(const Tree& tree, double t) const {
    if (!(t >= 0.0 && t <= 1.0)) throw std::out_of_range("trajectory time must lie in [0, 1]");
    if (t == 0.0) return start_;
    if (t == 1.0) return end_;
    auto it = std::lower_bound(phases_.begin(), phases_.end(), t, [](const TreePhase& p, double v) { return p.t1 < v; });
    if (it == phases_.end()) it = std::prev(phases_.end());
    const double span = it->t1 - it->t0;
    const double lambda = span > 0.0 ? std::clamp((t - it->t0) / span, 0.0, 1.0) : 1.0;
    TreeConfiguration out;
    out.reserve(it->moves.size());
    for (const auto& m : it->moves) out.push_back(m.at(tree, lambda));
    return out;
}

TreeTrajectory TreeTrajectory::reversed() const {
    TreeTrajectory r;
    for (auto it = phases_.rbegin(); it != phases_.rend(); ++it) {
        TreePhase ph{1.0 - it->t1, 1.0 - it->t0, {}};
        for (const auto& m : it->moves) ph.moves.push_back(m.reversed());
        r.phases_.push_back(std::move(ph));
    }
    r.phases_.front().t0 = 0.0;
    r.phases_.back().t1 = 1.0;
    r.start_ = end_;
    r.end_ = start_;
    return r;
}

TreeTrajectory concatenate(std::span<const TreeTrajectory> parts) {
    if (parts.empty()) throw std::invalid_argument("concatenate needs at least one part");
    for (std::size_t i = 0; i + 1 < parts.size(); ++i) {
        const auto& a = parts[i].end();
        const auto& b = parts[i + 1].start();
        if (a.size() != b.size()) throw std::invalid_argument("junction " + std::to_string(i) + " particle count mismatch");
        for (std::size_t p = 0; p < a.size(); ++p)
            if (!same_point(a[p], b[p])) throw std::invalid_argument("junction " + std::to_string(i) + " mismatch");
    }
    TreeTrajectory out;
    const double k = static_cast<double>(parts.size());
    for (std::size_t i = 0; i < parts.size(); ++i) {
        const double base = double(i) / k;
        for (const auto& ph : parts[i].phases())
            out.phases_.push_back({base + ph.t0 / k, base + ph.t1 / k, ph.moves});
    }
    out.phases_.front().t0 = 0.0;
    out.phases_.back().t1 = 1.0;
    out.start_ = parts.front().start();
    out.end_ = parts.back().end();
    return out;
}

TreeTrajectory concatenate(std::initializer_list<TreeTrajectory> parts) {
    return concatenate(std::span<const TreeTrajectory>(parts.begin(), parts.size()));
}

double sup_distance(const Tree& tree, const TreeTrajectory& a, const TreeTrajectory& b, int samples) {
    double best = 0.0;
    for (int i = 0; i < samples; ++i) {
        const double t = i == samples - 1 ? 1.0 : double(i) / (samples - 1);
        const auto ca = a.evaluate(tree, t);
        const auto cb = b.evaluate(tree, t);
        for (std::size_t p = 0; p < ca.size(); ++p) best = std::max(best, tree_distance(tree, ca[p], cb[p]));
    }
    return best;
}

Tree make_y_tree() { return Tree({0, 1, 2, 3}, {{0, 1}, {1, 2}, {1, 3}}, 0); }

Tree make_h_tree() { return Tree({0, 1, 2, 3, 4, 5}, {{0, 1}, {1, 2}, {1, 3}, {3, 4}, {3, 5}}, 0); }

Tree make_star_tree(int degree) {
    if (degree < 1) throw std::invalid_argument("star degree must be positive");
    std::vector<int> ids{0, 1};
    std::vector<std::pair<int, int>> edges{{0, 1}};
    for (int k = 1; k < degree; ++k) {
        ids.push_back(k + 1);
        edges.emplace_back(1, k + 1);
    }
    return Tree(ids, edges, 0);
}

}  // namespace tcmotion
