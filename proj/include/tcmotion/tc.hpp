/**
 * Closed-form topological complexity values for configuration spaces,
 * sphere products, and surfaces, plus the embedding of a sphere product into
 * a configuration space together with its retraction.
 */
#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tcmotion/geometry.hpp"
#include "tcmotion/tree.hpp"

namespace tcmotion {

/// A known value, or an unknown value with an upper bound.
struct TCValue {
    std::optional<int> value;
    std::optional<int> upper_bound;
    std::string source;

    bool known() const { return value.has_value(); }
};

TCValue tc_euclid_config(int d, int n);
TCValue tc_tree_config(const Tree& tree, int n);
TCValue tc_sphere_product(int sphere_dim, int factors);
TCValue tc_s_euclid(int s, int d, int n);
TCValue tc_surface(int genus, bool orientable);

/// Returns (distributed, centralized) region counts for k agents with a regions each.
std::pair<long long, long long> control_strategy_counts(int a, int k);

/// Tree homeomorphic to the letter Y: one essential vertex, of degree 3.
bool is_y_shaped(const Tree& tree);

/// z_1 = 0, z_{i+1} = z_i + 3^(i-1) u_i. Throws unless every u_i has unit norm.
Configuration sphere_product_embed(const std::vector<Vector>& units);
/// Normalized successive differences of the points.
std::vector<Vector> sphere_product_retract(const Configuration& c);

}  // namespace tcmotion
