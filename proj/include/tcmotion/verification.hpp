/**
 * Empirical checks shared by all planners: endpoint (section) checks,
 * collision checks, region partitions and continuity probes, plus seeded
 * generators of test inputs.
 *
 * Kernels exist in two forms: an OpenMP version used by default and a plain
 * serial version kept as the reference. Both return identical results.
 */
#pragma once

#include <functional>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "tcmotion/euclid_planner.hpp"
#include "tcmotion/even_planner.hpp"
#include "tcmotion/geometry.hpp"
#include "tcmotion/sphere_planner.hpp"
#include "tcmotion/trajectory.hpp"
#include "tcmotion/tree.hpp"
#include "tcmotion/tree_planner.hpp"

namespace tcmotion {

struct CheckReport {
    double endpoint_error = 0.0;  // absolute, max-norm (tree metric for trees)
    double scale = 1.0;           // max(1, input diameter)
    double min_separation = kInfinity;
    double separation_tol = 0.0;
    int samples = 0;
    RegionIndex region{};
    bool pass = false;
    std::string failure;  // empty when pass

    double relative_endpoint_error() const { return endpoint_error / scale; }
};

/// Minimum pairwise distance over the uniform grid t = k / (samples - 1).
double sampled_min_separation(const Trajectory& traj, int samples);
double sampled_min_separation_serial(const Trajectory& traj, int samples);

/**
 * Exact minimum pairwise distance over all linear pieces (closed-form
 * quadratic minimum per pair), together with the endpoints of every other
 * piece. Rotations are rigid, so their endpoints bound them.
 */
double exact_piece_min_separation(const Trajectory& traj);
double exact_piece_min_separation_serial(const Trajectory& traj);

/// Closed-form minimum over s in [0, 1] of |d0 + s (d1 - d0)|.
double segment_min_distance(std::span<const double> d0, std::span<const double> d1);

/// Requires samples >= 2 (the planners are checked at >= 100).
CheckReport check_trajectory(const Trajectory& traj, const Configuration& a, const Configuration& b, int samples,
                             RegionIndex region = {}, Tolerances tol = {});
CheckReport check_trajectory_serial(const Trajectory& traj, const Configuration& a, const Configuration& b,
                                    int samples, RegionIndex region = {}, Tolerances tol = {});

double tree_sampled_min_separation(const Tree& tree, const TreeTrajectory& traj, int samples);
double tree_sampled_min_separation_serial(const Tree& tree, const TreeTrajectory& traj, int samples);

/**
 * Exact collision test on every phase: a static particle must not lie on the
 * route of a moving one, and two particles moving inside the same edge must
 * keep their order. Other simultaneous motions are covered by sampling only.
 * Returns an empty string on success, otherwise a reason.
 */
std::string tree_phase_violation(const Tree& tree, const TreeTrajectory& traj);

/// Tree analogue of check_trajectory; scale is max(1, tree diameter of the inputs).
CheckReport check_tree_trajectory(const Tree& tree, const TreeTrajectory& traj, const TreeConfiguration& a,
                                  const TreeConfiguration& b, int samples, RegionIndex region = {},
                                  Tolerances tol = {});

/// Runs trial(i) for i in [0, trials); the OpenMP version distributes trials over threads.
std::vector<CheckReport> check_batch(int trials, const std::function<CheckReport(int)>& trial);
std::vector<CheckReport> check_batch_serial(int trials, const std::function<CheckReport(int)>& trial);

struct RegionHistogram {
    std::map<int, long> counts;
    int min_label = 0;
    int max_label = 0;

    long total() const;
    bool labels_in_range() const;
    /// Number of distinct labels observed.
    int distinct() const { return static_cast<int>(counts.size()); }
};

/// Labels every drawn pair exactly once; `label` returns the region of pair i.
RegionHistogram check_partition(int samples, int min_label, int max_label, const std::function<int(int)>& label);

struct ProbeReport {
    std::vector<double> deviations;  // one per accepted trial
    int discarded = 0;               // perturbations that left the base region

    double max_deviation() const;
    /// Fraction of accepted trials with deviation <= bound.
    double fraction_within(double bound) const;
};

/**
 * Perturbs the base pair `trials` times and measures the sup-distance between
 * the base plan and each perturbed plan. `perturb(rng)` returns a perturbed
 * plan's deviation, or nothing when the perturbation left the base region.
 */
template <class Perturb>
ProbeReport continuity_probe(int trials, std::mt19937_64& rng, Perturb&& perturb) {
    ProbeReport report;
    for (int t = 0; t < trials; ++t) {
        const std::optional<double> dev = perturb(rng);
        if (dev)
            report.deviations.push_back(*dev);
        else
            ++report.discarded;
    }
    return report;
}

// Region-preserving probes for each planner; delta is the perturbation size.
ProbeReport probe_euclid(const EuclidPlanner& planner, const Configuration& a, const Configuration& b, double delta,
                         int trials, std::mt19937_64& rng, int samples = 1000);
ProbeReport probe_even(const EvenPlanner& planner, const Configuration& a, const Configuration& b, double delta,
                       int trials, std::mt19937_64& rng, int samples = 1000);
ProbeReport probe_sphere(const SpherePlanner& planner, const SpherePoint& a, const SpherePoint& b, double delta,
                         int trials, std::mt19937_64& rng, int samples = 1000);
ProbeReport probe_tree(const TreePlanner& planner, const TreeConfiguration& a, const TreeConfiguration& b,
                       double delta, int trials, std::mt19937_64& rng, int samples = 1000);

// Seeded input generators. Distinct points are >= 1e-3 apart and distinct
// projections differ by >= 1e-3, far from every region boundary.

/// Points in [-1, 1]^d whose first-axis projection takes exactly cp distinct values.
Configuration random_configuration_with_cp(int dim, int n, int cp, std::mt19937_64& rng);
Configuration random_configuration(int dim, int n, std::mt19937_64& rng);

/**
 * Configuration whose projection onto its own line L_C (through z1 along
 * z2 - z1) takes exactly cp values, with direction e_C = dir.
 */
Configuration random_configuration_with_dirline_cp(int dim, int n, int cp, std::span<const double> dir,
                                                   std::mt19937_64& rng);
Vector random_unit_vector(int dim, std::mt19937_64& rng);

SpherePoint random_sphere_point(int ambient_dim, std::mt19937_64& rng);

/// n points of the tree, `at_essential` of them exactly on distinct essential vertices, the rest on edge interiors.
TreeConfiguration random_tree_configuration(const Tree& tree, int n, int at_essential, std::mt19937_64& rng);

}  // namespace tcmotion
