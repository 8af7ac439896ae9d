#include "tcmotion/tree_planner.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace tcmotion {

namespace {

std::vector<int> order_on_root_edge(const Tree& tree, const TreeConfiguration& c) {
    for (const auto& p : c)
        if (p.is_vertex() || p.index != tree.root_edge())
            throw std::invalid_argument("all points must lie in the interior of the root edge");
    std::vector<int> order(c.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) { return c[a].s < c[b].s; });
    return order;
}

/// Single phase in which only `who` moves.
std::vector<TreeMove> solo_move(const Tree& tree, const TreeConfiguration& current, int who, const TreePoint& target) {
    std::vector<TreeMove> moves;
    moves.reserve(current.size());
    for (std::size_t i = 0; i < current.size(); ++i)
        moves.emplace_back(tree, current[i], static_cast<int>(i) == who ? target : current[i]);
    return moves;
}

std::vector<TreeMove> slide(const Tree& tree, const TreeConfiguration& from, const TreeConfiguration& to) {
    std::vector<TreeMove> moves;
    for (std::size_t i = 0; i < from.size(); ++i) moves.emplace_back(tree, from[i], to[i]);
    return moves;
}

int find_hub(const Tree& tree) {
    int v = tree.edge(tree.root_edge()).upper;
    while (tree.degree(v) == 2) {
        for (int e : tree.incident_edges(v))
            if (e != tree.descending_edge(v)) {
                v = tree.edge(e).upper;
                break;
            }
    }
    return tree.is_essential(v) ? v : -1;
}

std::vector<int> ascending_edges_of(const Tree& tree, int v) {
    std::vector<int> out;
    for (int e : tree.incident_edges(v))
        if (e != tree.descending_edge(v)) out.push_back(e);
    return out;
}

}  // namespace

std::vector<int> minimal_points(const Tree& tree, const TreeConfiguration& c) {
    std::vector<int> out;
    for (std::size_t i = 0; i < c.size(); ++i) {
        bool minimal = true;
        for (std::size_t j = 0; j < c.size() && minimal; ++j)
            if (j != i && partial_geq(tree, c[i], c[j])) minimal = false;
        if (minimal) out.push_back(static_cast<int>(i));
    }
    return out;
}

TreeTrajectory root_edge_shuffle(const Tree& tree, const TreeConfiguration& from, const TreeConfiguration& to) {
    if (from.size() != to.size()) throw std::invalid_argument("configurations must have the same number of points");
    validate(tree, from);
    validate(tree, to);
    const auto from_order = order_on_root_edge(tree, from);
    const auto to_order = order_on_root_edge(tree, to);
    if (from_order == to_order) return TreeTrajectory::from_phases(tree, {slide(tree, from, to)});

    const int hub = find_hub(tree);
    if (hub < 0)
        throw std::invalid_argument("tree has no essential vertex: root-edge orderings cannot be permuted");
    const auto branches = ascending_edges_of(tree, hub);
    const int n = static_cast<int>(from.size());
    const int e0 = tree.root_edge();
    const double step = 1.0 / (n + 1);

    // Stack 0 is the trunk (root edge), stacks 1 and 2 are branch edges at the hub.
    std::vector<std::vector<int>> stacks(3);
    auto slot = [&](int stack, int height) {
        if (stack == 0) return TreePoint::on_edge(e0, (height + 1) * step);
        return TreePoint::on_edge(branches[stack - 1], (n - height) * step);
    };

    std::vector<std::vector<TreeMove>> phases;
    TreeConfiguration current(from.size());
    for (int h = 0; h < n; ++h) {
        current[from_order[h]] = slot(0, h);
        stacks[0].push_back(from_order[h]);
    }
    phases.push_back(slide(tree, from, current));

    auto transfer = [&](int src, int dst) {
        const int who = stacks[src].back();
        stacks[src].pop_back();
        const TreePoint target = slot(dst, static_cast<int>(stacks[dst].size()));
        phases.push_back(solo_move(tree, current, who, target));
        current[who] = target;
        stacks[dst].push_back(who);
    };

    while (!stacks[0].empty()) transfer(0, 1);
    for (int label : to_order) {
        const int src = std::find(stacks[1].begin(), stacks[1].end(), label) != stacks[1].end() ? 1 : 2;
        const int other = src == 1 ? 2 : 1;
        while (stacks[src].back() != label) transfer(src, other);
        transfer(src, 0);
    }
    phases.push_back(slide(tree, current, to));
    return TreeTrajectory::from_phases(tree, std::move(phases));
}

TreePlanner::TreePlanner(Tree tree) : tree_(std::move(tree)), m_(tree_.essential_count()) {
    if (m_ == 0)
        throw std::invalid_argument("tree has no essential vertex; it is an arc and F(arc, n) is disconnected for n >= 2");
    hub_ = find_hub(tree_);
    const auto branches = ascending_edges_of(tree_, hub_);
    branch_a_ = branches[0];
    branch_b_ = branches[1];
}

double TreePlanner::parking_scale(const TreeConfiguration& c) const {
    double low = 0.5;
    for (const auto& p : c)
        if (!p.is_vertex() && p.index == tree_.root_edge()) low = std::min(low, p.s);
    return 0.5 * low;
}

Descent TreePlanner::descend_all(const TreeConfiguration& c) const {
    validate(tree_, c);
    const int n = static_cast<int>(c.size());
    const double delta = parking_scale(c);
    const int e0 = tree_.root_edge();

    std::vector<int> remaining(c.size());
    std::iota(remaining.begin(), remaining.end(), 0);
    TreeConfiguration current = c;
    std::vector<std::vector<TreeMove>> phases;
    std::vector<int> order;

    while (!remaining.empty()) {
        TreeConfiguration rest;
        for (int i : remaining) rest.push_back(c[i]);
        std::vector<int> batch;
        for (int local : minimal_points(tree_, rest)) batch.push_back(remaining[local]);
        for (int i : batch) {
            const int k = static_cast<int>(order.size()) + 1;
            const TreePoint target = TreePoint::on_edge(e0, delta * k / (n + 1));
            phases.push_back(solo_move(tree_, current, i, target));
            current[i] = target;
            order.push_back(i);
        }
        std::erase_if(remaining, [&](int i) { return std::find(batch.begin(), batch.end(), i) != batch.end(); });
    }
    return {TreeTrajectory::from_phases(tree_, std::move(phases)), current, order};
}

TreeTrajectory TreePlanner::root_edge_shuffle(const TreeConfiguration& from, const TreeConfiguration& to) const {
    return tcmotion::root_edge_shuffle(tree_, from, to);
}

RegionIndex TreePlanner::region_index(const TreeConfiguration& a, const TreeConfiguration& b) const {
    auto count = [&](const TreeConfiguration& c) {
        return static_cast<int>(std::count_if(c.begin(), c.end(), [&](const TreePoint& p) {
            return p.is_vertex() && tree_.is_essential(p.index);
        }));
    };
    return {count(a) + count(b)};
}

TreePlanResult TreePlanner::plan(const TreeConfiguration& a, const TreeConfiguration& b) const {
    if (a.size() != b.size()) throw std::invalid_argument("configurations must have the same number of points");
    const Descent down_a = descend_all(a);
    const Descent down_b = descend_all(b);
    const TreeTrajectory shuffle = root_edge_shuffle(down_a.parked, down_b.parked);
    return {concatenate({down_a.trajectory, shuffle, down_b.trajectory.reversed()}), region_index(a, b)};
}

}  // namespace tcmotion
