/**
 * Tame motion planner for n particles on a tree with m >= 1 essential
 * vertices, using 2m + 1 regions of continuity.
 *
 * Both configurations are parked on the root edge e0 by repeatedly sending
 * the minimal points (in the root partial order) down to slots near the root;
 * the parked configurations are then joined by a stack shuffle through the
 * first essential vertex above e0. The region of a pair counts how many of
 * its points sit exactly on essential vertices.
 */
#pragma once

#include <vector>

#include "tcmotion/euclid_planner.hpp"
#include "tcmotion/tree.hpp"

namespace tcmotion {

struct Descent {
    TreeTrajectory trajectory;
    TreeConfiguration parked;
    /// Labels in slot order, lowest slot first.
    std::vector<int> order;
};

struct TreePlanResult {
    TreeTrajectory trajectory;
    RegionIndex region;
};

/// Indices i such that no other point lies on z_i's root path, in increasing order.
std::vector<int> minimal_points(const Tree& tree, const TreeConfiguration& c);

class TreePlanner {
public:
    /// Throws std::invalid_argument when the tree has no essential vertex.
    explicit TreePlanner(Tree tree);

    const Tree& tree() const { return tree_; }
    int essential_count() const { return m_; }
    RegionIndex min_region() const { return {0}; }
    RegionIndex max_region() const { return {2 * m_}; }

    /// First essential vertex above the root edge; its first two ascending edges serve as shuffle stacks.
    int hub() const { return hub_; }

    /// Parks every point on the root edge, batch by batch of minimal points.
    Descent descend_all(const TreeConfiguration& c) const;

    /// Motion between two configurations lying in the interior of the root edge.
    TreeTrajectory root_edge_shuffle(const TreeConfiguration& from, const TreeConfiguration& to) const;

    RegionIndex region_index(const TreeConfiguration& a, const TreeConfiguration& b) const;

    TreePlanResult plan(const TreeConfiguration& a, const TreeConfiguration& b) const;

    /// Parking-slot scale: half of min(1/2, smallest root-edge coordinate present).
    double parking_scale(const TreeConfiguration& c) const;

private:
    Tree tree_;
    int m_;
    int hub_ = -1;
    int branch_a_ = -1;
    int branch_b_ = -1;
};

/**
 * Motion between two configurations in the interior of the root edge. Equal
 * orderings slide directly; other orderings are realized by a two-stack
 * shuffle through the first essential vertex above the root edge, so a tree
 * without essential vertices rejects them.
 */
TreeTrajectory root_edge_shuffle(const Tree& tree, const TreeConfiguration& from, const TreeConfiguration& to);

}  // namespace tcmotion
