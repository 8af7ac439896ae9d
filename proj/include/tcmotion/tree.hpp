/**
 * Rooted metric trees, points on them, and piecewise motions of particles
 * along tree paths.
 *
 * Vertices and edges are addressed by dense internal indices; the external
 * integer vertex ids are kept only for I/O. Every edge is oriented from its
 * lower endpoint (closer to the root) to its upper endpoint, and edge-interior
 * points carry s in (0, 1) measured from the lower endpoint.
 */
#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace tcmotion {

struct TreeEdge {
    int lower = -1;
    int upper = -1;
    double length = 1.0;
};

class Tree {
public:
    /**
     * Builds a tree from external vertex ids and undirected edges (pairs of ids).
     * Throws std::invalid_argument unless the graph is connected and acyclic,
     * lengths are positive, and the root is univalent.
     */
    Tree(std::vector<int> vertex_ids, const std::vector<std::pair<int, int>>& edges, int root_id,
         std::vector<double> lengths = {});

    int num_vertices() const { return static_cast<int>(ids_.size()); }
    int num_edges() const { return static_cast<int>(edges_.size()); }
    int root() const { return root_; }
    int root_edge() const { return descending_[root_child_]; }
    const TreeEdge& edge(int e) const { return edges_[e]; }
    int degree(int v) const { return static_cast<int>(incident_[v].size()); }
    bool is_essential(int v) const { return degree(v) >= 3; }
    std::span<const int> incident_edges(int v) const { return incident_[v]; }

    /// Edge from v toward the root; -1 for the root itself.
    int descending_edge(int v) const { return descending_[v]; }
    int parent(int v) const { return descending_[v] < 0 ? -1 : edges_[descending_[v]].lower; }
    double depth(int v) const { return depth_[v]; }
    double total_length() const;

    std::vector<int> essential_vertices() const;
    int essential_count() const;

    /// True when a lies on the root path of b (a == b included).
    bool is_ancestor_or_self(int a, int b) const;
    int lowest_common_ancestor(int a, int b) const;

    int id_of(int v) const { return ids_[v]; }
    int index_of(int id) const;
    /// Edge joining two vertex indices, or -1.
    int edge_between(int u, int v) const;
    const std::vector<int>& ids() const { return ids_; }
    std::vector<std::pair<int, int>> edge_id_pairs() const;
    std::vector<double> lengths() const;

    /// Vertex path from a to b (inclusive) through their lowest common ancestor.
    std::vector<int> vertex_path(int a, int b) const;

private:
    std::vector<int> ids_;
    std::vector<TreeEdge> edges_;
    std::vector<std::vector<int>> incident_;
    std::vector<int> descending_;
    std::vector<double> depth_;
    std::vector<int> level_;  // hop count from the root
    int root_ = -1;
    int root_child_ = -1;
};

/// A point of the tree: a vertex or the interior of an edge.
struct TreePoint {
    enum class Kind { Vertex, Edge };
    Kind kind = Kind::Vertex;
    int index = 0;  // vertex index or edge index
    double s = 0.0;  // in (0, 1) for edge points, measured from the lower endpoint

    static TreePoint vertex(int v) { return {Kind::Vertex, v, 0.0}; }
    /// Edge-interior point; throws unless 0 < s < 1.
    static TreePoint on_edge(int e, double s);
    /// Point at fraction s in [0, 1] along edge e; the endpoints become vertex points.
    static TreePoint at(const Tree& tree, int e, double s);

    bool is_vertex() const { return kind == Kind::Vertex; }
    friend bool operator==(const TreePoint&, const TreePoint&) = default;
};

using TreeConfiguration = std::vector<TreePoint>;

/// Distance from the root along the tree.
double depth(const Tree& tree, const TreePoint& p);
/// Geodesic distance in the tree metric.
double tree_distance(const Tree& tree, const TreePoint& x, const TreePoint& y);
/// x >= y: y lies on the simple path from x to the root (reflexive).
bool partial_geq(const Tree& tree, const TreePoint& x, const TreePoint& y);

/// Validates indices, s ranges, and pairwise distinctness; throws std::invalid_argument.
void validate(const Tree& tree, const TreeConfiguration& c);
bool is_valid(const Tree& tree, const TreeConfiguration& c);
double min_separation(const Tree& tree, const TreeConfiguration& c);

/// Portion of a route lying on one edge, traversed from s0 to s1.
struct EdgeStep {
    int edge = -1;
    double s0 = 0.0;
    double s1 = 0.0;
};

/// Uniform-speed motion of one particle along the unique tree path between two points.
class TreeMove {
public:
    TreeMove(const Tree& tree, const TreePoint& from, const TreePoint& to);

    const TreePoint& from() const { return from_; }
    const TreePoint& to() const { return to_; }
    double length() const { return length_; }
    bool is_static() const { return steps_.empty(); }
    std::span<const EdgeStep> steps() const { return steps_; }

    TreePoint at(const Tree& tree, double lambda) const;
    TreeMove reversed() const;

private:
    TreeMove() = default;
    TreePoint from_;
    TreePoint to_;
    std::vector<EdgeStep> steps_;
    std::vector<double> cumulative_;  // arc length at the end of each step
    double length_ = 0.0;
};

/// Simultaneous motion of all particles over one time interval.
struct TreePhase {
    double t0 = 0.0;
    double t1 = 1.0;
    std::vector<TreeMove> moves;
};

class TreeTrajectory {
public:
    static TreeTrajectory constant(const Tree& tree, const TreeConfiguration& c);
    /// Phases of equal duration; each phase must start where the previous ended.
    static TreeTrajectory from_phases(const Tree& tree, std::vector<std::vector<TreeMove>> phases);

    TreeConfiguration evaluate(const Tree& tree, double t) const;
    TreeTrajectory reversed() const;

    const TreeConfiguration& start() const { return start_; }
    const TreeConfiguration& end() const { return end_; }
    std::span<const TreePhase> phases() const { return phases_; }

private:
    friend TreeTrajectory concatenate(std::span<const TreeTrajectory> parts);
    std::vector<TreePhase> phases_;
    TreeConfiguration start_;
    TreeConfiguration end_;
};

/// Joins tree trajectories with equal time shares; endpoints must match exactly (s within 1e-12).
TreeTrajectory concatenate(std::span<const TreeTrajectory> parts);
TreeTrajectory concatenate(std::initializer_list<TreeTrajectory> parts);

bool same_point(const TreePoint& a, const TreePoint& b, double s_tol = 1e-12);

/// sup over uniform sample times of the max per-particle tree distance.
double sup_distance(const Tree& tree, const TreeTrajectory& a, const TreeTrajectory& b, int samples);

/// Y graph: root 0 -> center 1 -> leaves 2, 3.
Tree make_y_tree();
/// H-shaped tree: root 0 -> 1 (essential) -> {2, 3}; 3 (essential) -> {4, 5}.
Tree make_h_tree();
/// Star with one essential vertex of the given degree, rooted at a leaf.
Tree make_star_tree(int degree);

}  // namespace tcmotion
