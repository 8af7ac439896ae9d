/**
 * Two-vertex graph model Q_Gamma of the configuration space of two points on
 * a tree, with its free involution.
 */
#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "tcmotion/tree.hpp"

namespace tcmotion {

struct EdgeSplit {
    int descending = -1;
    std::vector<int> ascending;
};

/// Splits the edges at v into the one on its root path and the rest; throws for the root.
EdgeSplit ascending_descending(const Tree& tree, int v);

/// Edge of Q_Gamma joining A to B: essential vertex v and an ordered pair of distinct ascending edges.
struct QEdge {
    int vertex = -1;
    int first = -1;
    int second = -1;
    friend bool operator==(const QEdge&, const QEdge&) = default;
};

struct QGammaComplex {
    std::vector<QEdge> edges;
    int num_vertices() const { return 2; }
    int num_edges() const { return static_cast<int>(edges.size()); }
};

/// Throws std::invalid_argument when the tree has no essential vertex.
QGammaComplex build_qgamma(const Tree& tree);

/// Image of each edge under the involution, as indices into q.edges.
std::vector<int> involution(const QGammaComplex& q);

/// Sum over essential vertices of (eta - 1)(eta - 2).
long long qgamma_edge_formula(const Tree& tree);

/// First Betti number of F(tree, 2); throws when the tree has no essential vertex.
long long betti1_f2(const Tree& tree);

/// Uniform-attachment random tree rooted at vertex 0 (a leaf), with the given vertex count >= 2.
Tree random_tree(int num_vertices, std::mt19937_64& rng);

/// Same tree rerooted at another univalent vertex (given by index).
Tree reroot(const Tree& tree, int new_root);

}  // namespace tcmotion
