#include "tcmotion/qgamma.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <tuple>

namespace tcmotion {

EdgeSplit ascending_descending(const Tree& tree, int v) {
    if (v == tree.root()) throw std::invalid_argument("the root has no descending edge");
    EdgeSplit split;
    split.descending = tree.descending_edge(v);
    for (int e : tree.incident_edges(v))
        if (e != split.descending) split.ascending.push_back(e);
    return split;
}

QGammaComplex build_qgamma(const Tree& tree) {
    if (tree.essential_count() == 0) throw std::invalid_argument("Q_Gamma needs a tree with an essential vertex");
    QGammaComplex q;
    for (int v : tree.essential_vertices()) {
        const auto up = ascending_descending(tree, v).ascending;
        for (int e : up)
            for (int f : up)
                if (e != f) q.edges.push_back({v, e, f});
    }
    return q;
}

std::vector<int> involution(const QGammaComplex& q) {
    std::map<std::tuple<int, int, int>, int> where;
    for (int i = 0; i < q.num_edges(); ++i) where[{q.edges[i].vertex, q.edges[i].first, q.edges[i].second}] = i;
    std::vector<int> image(q.edges.size());
    for (int i = 0; i < q.num_edges(); ++i) {
        const auto it = where.find({q.edges[i].vertex, q.edges[i].second, q.edges[i].first});
        if (it == where.end()) throw std::logic_error("Q_Gamma edge without a twin");
        image[i] = it->second;
    }
    return image;
}

long long qgamma_edge_formula(const Tree& tree) {
    long long total = 0;
    for (int v : tree.essential_vertices()) {
        const long long eta = tree.degree(v);
        total += (eta - 1) * (eta - 2);
    }
    return total;
}

long long betti1_f2(const Tree& tree) {
    if (tree.essential_count() == 0) throw std::invalid_argument("b1 formula needs a tree with an essential vertex");
    return qgamma_edge_formula(tree) - 1;
}

Tree random_tree(int num_vertices, std::mt19937_64& rng) {
    if (num_vertices < 2) throw std::invalid_argument("random tree needs at least 2 vertices");
    std::vector<int> ids(num_vertices);
    for (int i = 0; i < num_vertices; ++i) ids[i] = i;
    std::vector<std::pair<int, int>> edges{{0, 1}};
    // Vertex 0 stays a leaf so it can serve as root.
    for (int v = 2; v < num_vertices; ++v) {
        std::uniform_int_distribution<int> pick(1, v - 1);
        edges.emplace_back(pick(rng), v);
    }
    return Tree(std::move(ids), edges, 0);
}

Tree reroot(const Tree& tree, int new_root) {
    return Tree(tree.ids(), tree.edge_id_pairs(), tree.id_of(new_root), tree.lengths());
}

}  // namespace tcmotion
