/**
 * File formats: JSON for configurations, trees and tree points, CSV for
 * sampled Euclidean trajectories, and a JSON sample dump for tree motions.
 * Doubles are written with round-trip precision.
 */
#pragma once

#include <iosfwd>
#include <string>

#include "json.hpp"

#include "tcmotion/geometry.hpp"
#include "tcmotion/trajectory.hpp"
#include "tcmotion/tree.hpp"

namespace tcmotion {

/// {"dim": d, "points": [[x, ...], ...]}
nlohmann::json to_json(const Configuration& c);
/// Throws std::invalid_argument on malformed input or coincident points.
Configuration configuration_from_json(const nlohmann::json& j);

/// {"vertices": [ids], "edges": [[u, v], ...], "root": id, "lengths": [...]}
nlohmann::json to_json(const Tree& tree);
Tree tree_from_json(const nlohmann::json& j);

/// {"type": "vertex", "id": v} or {"type": "edge", "edge": [u, v], "s": s}, ids external, s from u.
nlohmann::json to_json(const Tree& tree, const TreePoint& p);
TreePoint tree_point_from_json(const Tree& tree, const nlohmann::json& j);

nlohmann::json to_json(const Tree& tree, const TreeConfiguration& c);
TreeConfiguration tree_configuration_from_json(const Tree& tree, const nlohmann::json& j);

/// Reads and parses a JSON file; throws std::invalid_argument when unreadable or malformed.
nlohmann::json read_json_file(const std::string& path);

/// Header t,p0_x0,...; `rows` uniform samples over [0, 1].
void write_trajectory_csv(std::ostream& out, const Trajectory& traj, int rows);

/// {"samples": [{"t": t, "points": [...]}, ...]}
nlohmann::json tree_sample_dump(const Tree& tree, const TreeTrajectory& traj, int rows);

}  // namespace tcmotion
