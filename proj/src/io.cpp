#include "tcmotion/io.hpp"

#include <cstdio>
#include <fstream>
#include <ostream>
#include <stdexcept>
#include <vector>

namespace tcmotion {

using nlohmann::json;

namespace {

const json& field(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw std::invalid_argument(std::string("missing field \"") + key + "\"");
    return j.at(key);
}

}  // namespace

json to_json(const Configuration& c) {
    json points = json::array();
    for (int i = 0; i < c.size(); ++i) points.push_back(std::vector<double>(c.point(i).begin(), c.point(i).end()));
    return {{"dim", c.dim()}, {"points", points}};
}

Configuration configuration_from_json(const json& j) {
    try {
        const int dim = field(j, "dim").get<int>();
        const auto points = field(j, "points").get<std::vector<std::vector<double>>>();
        for (const auto& p : points)
            if (static_cast<int>(p.size()) != dim) throw std::invalid_argument("point dimension does not match dim");
        return Configuration(dim, points);
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("malformed configuration: ") + e.what());
    }
}

json to_json(const Tree& tree) {
    json edges = json::array();
    for (const auto& [u, v] : tree.edge_id_pairs()) edges.push_back({u, v});
    return {{"vertices", tree.ids()}, {"edges", edges}, {"root", tree.id_of(tree.root())}, {"lengths", tree.lengths()}};
}

Tree tree_from_json(const json& j) {
    try {
        auto ids = field(j, "vertices").get<std::vector<int>>();
        std::vector<std::pair<int, int>> edges;
        for (const auto& e : field(j, "edges")) {
            const auto pair = e.get<std::vector<int>>();
            if (pair.size() != 2) throw std::invalid_argument("edge must list two vertex ids");
            edges.emplace_back(pair[0], pair[1]);
        }
        std::vector<double> lengths;
        if (j.contains("lengths")) lengths = j.at("lengths").get<std::vector<double>>();
        return Tree(std::move(ids), edges, field(j, "root").get<int>(), std::move(lengths));
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("malformed tree: ") + e.what());
    }
}

json to_json(const Tree& tree, const TreePoint& p) {
    if (p.is_vertex()) return {{"type", "vertex"}, {"id", tree.id_of(p.index)}};
    const auto& e = tree.edge(p.index);
    return {{"type", "edge"}, {"edge", {tree.id_of(e.lower), tree.id_of(e.upper)}}, {"s", p.s}};
}

TreePoint tree_point_from_json(const Tree& tree, const json& j) {
    try {
        const auto type = field(j, "type").get<std::string>();
        if (type == "vertex") return TreePoint::vertex(tree.index_of(field(j, "id").get<int>()));
        if (type != "edge") throw std::invalid_argument("tree point type must be \"vertex\" or \"edge\"");
        const auto ends = field(j, "edge").get<std::vector<int>>();
        if (ends.size() != 2) throw std::invalid_argument("edge must list two vertex ids");
        const int u = tree.index_of(ends[0]);
        const int v = tree.index_of(ends[1]);
        const int e = tree.edge_between(u, v);
        if (e < 0) throw std::invalid_argument("no edge between the given vertices");
        const double s = field(j, "s").get<double>();
        // s is measured from the first listed endpoint.
        return TreePoint::on_edge(e, tree.edge(e).lower == u ? s : 1.0 - s);
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("malformed tree point: ") + e.what());
    }
}

json to_json(const Tree& tree, const TreeConfiguration& c) {
    json out = json::array();
    for (const auto& p : c) out.push_back(to_json(tree, p));
    return out;
}

TreeConfiguration tree_configuration_from_json(const Tree& tree, const json& j) {
    if (!j.is_array()) throw std::invalid_argument("tree configuration must be a JSON array");
    TreeConfiguration c;
    for (const auto& p : j) c.push_back(tree_point_from_json(tree, p));
    validate(tree, c);
    return c;
}

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        throw std::invalid_argument("malformed JSON in " + path + ": " + e.what());
    }
}

void write_trajectory_csv(std::ostream& out, const Trajectory& traj, int rows) {
    if (rows < 2) throw std::invalid_argument("need at least 2 rows");
    const int n = traj.num_points();
    const int d = traj.dim();
    out << 't';
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < d; ++k) out << ",p" << i << "_x" << k;
    out << '\n';
    char buf[32];
    for (int r = 0; r < rows; ++r) {
        const double t = static_cast<double>(r) / (rows - 1);
        const Configuration c = traj.evaluate(t);
        std::snprintf(buf, sizeof buf, "%.17g", t);
        out << buf;
        for (double x : c.coords()) {
            std::snprintf(buf, sizeof buf, "%.17g", x);
            out << ',' << buf;
        }
        out << '\n';
    }
}

json tree_sample_dump(const Tree& tree, const TreeTrajectory& traj, int rows) {
    if (rows < 2) throw std::invalid_argument("need at least 2 rows");
    json samples = json::array();
    for (int r = 0; r < rows; ++r) {
        const double t = static_cast<double>(r) / (rows - 1);
        samples.push_back({{"t", t}, {"points", to_json(tree, traj.evaluate(tree, t))}});
    }
    return {{"samples", samples}};
}

}  // namespace tcmotion
