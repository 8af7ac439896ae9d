// Command-line front end: plan, verify, tc, qgamma.
// Exit codes: 0 success, 1 failed check, 2 usage or input error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "tcmotion/euclid_planner.hpp"
#include "tcmotion/even_planner.hpp"
#include "tcmotion/io.hpp"
#include "tcmotion/qgamma.hpp"
#include "tcmotion/sphere_planner.hpp"
#include "tcmotion/tc.hpp"
#include "tcmotion/tree_planner.hpp"
#include "tcmotion/verification.hpp"

using nlohmann::json;
using namespace tcmotion;

namespace {

constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kUsage = 2;
constexpr std::uint64_t kDefaultSeed = 20240611;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Inline JSON when the argument starts with '{' or '[', otherwise a file path.
json load_json(const std::string& arg) {
    const auto first = arg.find_first_not_of(" \t\n");
    if (first != std::string::npos && (arg[first] == '{' || arg[first] == '[')) {
        try {
            return json::parse(arg);
        } catch (const json::exception& e) {
            throw std::invalid_argument(std::string("malformed inline JSON: ") + e.what());
        }
    }
    return read_json_file(arg);
}

std::uint64_t resolve_seed(const std::optional<std::uint64_t>& flag) {
    if (flag) return *flag;
    if (const char* env = std::getenv("TCMOTION_SEED")) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
            throw UsageError("TCMOTION_SEED must be a non-negative integer");
        }
    }
    return kDefaultSeed;
}

Tree named_tree(const std::string& shape) {
    if (shape == "y") return make_y_tree();
    if (shape == "h") return make_h_tree();
    if (shape.rfind("star", 0) == 0) return make_star_tree(std::stoi(shape.substr(4)));
    throw UsageError("unknown tree shape '" + shape + "' (use y, h or starN)");
}

Tree load_tree(const std::string& file, const std::string& shape) {
    if (!file.empty()) return tree_from_json(load_json(file));
    if (!shape.empty()) return named_tree(shape);
    throw UsageError("a tree is required: pass --tree FILE or --tree-shape");
}

void write_json(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot write " + path);
    out << j.dump(2) << '\n';
}

// ---- plan ----

struct PlanOptions {
    std::string planner;
    std::string from;
    std::string to;
    std::string tree_file;
    std::string tree_shape;
    std::string output;
    std::string meta;
    int samples = 1000;
};

int cmd_plan(const PlanOptions& o) {
    json meta{{"planner", o.planner}};
    const std::string meta_path = o.meta.empty() ? o.output + ".meta.json" : o.meta;

    if (o.planner == "tree") {
        const Tree tree = load_tree(o.tree_file, o.tree_shape);
        const TreeConfiguration a = tree_configuration_from_json(tree, load_json(o.from));
        const TreeConfiguration b = tree_configuration_from_json(tree, load_json(o.to));
        if (a.size() != b.size()) throw std::invalid_argument("configurations have different numbers of points");
        const TreePlanner planner(tree);
        const TreePlanResult plan = planner.plan(a, b);
        const CheckReport report = check_tree_trajectory(tree, plan.trajectory, a, b, o.samples, plan.region);
        write_json(o.output, tree_sample_dump(tree, plan.trajectory, o.samples));
        meta.update({{"region", plan.region.k},
                     {"n", a.size()},
                     {"d", 1},
                     {"endpoints_ok", report.endpoint_error <= 1e-9 * report.scale}});
        write_json(meta_path, meta);
        std::cout << meta.dump() << '\n';
        return kOk;
    }

    const Configuration a = configuration_from_json(load_json(o.from));
    const Configuration b = configuration_from_json(load_json(o.to));
    require_same_shape(a, b);
    Trajectory traj = Trajectory::constant(a);
    int region = 0;
    if (o.planner == "euclid") {
        const PlanResult r = EuclidPlanner(a.dim(), a.size()).plan(a, b);
        traj = r.trajectory;
        region = r.region.k;
    } else if (o.planner == "euclid-even") {
        const PlanResult r = EvenPlanner(a.dim(), a.size()).plan(a, b);
        traj = r.trajectory;
        region = r.region.k;
    } else if (o.planner == "sphere") {
        if (a.size() != 1) throw std::invalid_argument("sphere planning takes one point per configuration");
        const SpherePlan r = SpherePlanner(a.dim()).plan(SpherePoint::from_direction(a.point(0)),
                                                         SpherePoint::from_direction(b.point(0)));
        traj = r.trajectory;
        region = static_cast<int>(r.region);
    } else {
        throw UsageError("unknown planner '" + o.planner + "'");
    }
    const CheckReport report = check_trajectory(traj, a, b, o.samples, {region});
    std::ofstream csv(o.output);
    if (!csv) throw std::invalid_argument("cannot write " + o.output);
    write_trajectory_csv(csv, traj, o.samples);
    meta.update({{"region", region},
                 {"n", a.size()},
                 {"d", a.dim()},
                 {"endpoints_ok", report.endpoint_error <= 1e-9 * report.scale}});
    write_json(meta_path, meta);
    std::cout << meta.dump() << '\n';
    return kOk;
}

// ---- verify ----

struct VerifyOptions {
    std::string planner;
    int n = 3;
    int d = 2;
    int trials = 1000;
    int samples = 1000;
    std::string tree_file;
    std::string tree_shape = "y";
    std::optional<std::uint64_t> seed;
};

std::mt19937_64 trial_rng(std::uint64_t seed, int trial) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(trial)};
    return std::mt19937_64(seq);
}

int cmd_verify(const VerifyOptions& o) {
    const std::uint64_t seed = resolve_seed(o.seed);
    if (o.trials < 1) throw UsageError("--trials must be positive");
    if (o.samples < 100) throw UsageError("--samples must be at least 100");
    std::function<CheckReport(int)> trial;
    std::optional<EuclidPlanner> euclid;
    std::optional<EvenPlanner> even;
    std::optional<SpherePlanner> sphere;
    std::optional<TreePlanner> tree_planner;
    int d = o.d;

    if (o.planner == "euclid") {
        euclid.emplace(o.d, o.n);
        trial = [&](int i) {
            auto rng = trial_rng(seed, i);
            std::uniform_int_distribution<int> cp(1, o.n);
            const auto a = random_configuration_with_cp(o.d, o.n, cp(rng), rng);
            const auto b = random_configuration_with_cp(o.d, o.n, cp(rng), rng);
            const auto r = euclid->plan(a, b);
            return check_trajectory(r.trajectory, a, b, o.samples, r.region);
        };
    } else if (o.planner == "euclid-even") {
        even.emplace(o.d, o.n);
        trial = [&](int i) {
            auto rng = trial_rng(seed, i);
            std::uniform_int_distribution<int> cp(2, o.n);
            const Vector ea = random_unit_vector(o.d, rng);
            Vector eb = random_unit_vector(o.d, rng);
            if (std::bernoulli_distribution(0.25)(rng))
                for (std::size_t k = 0; k < eb.size(); ++k) eb[k] = -ea[k];
            const auto a = random_configuration_with_dirline_cp(o.d, o.n, cp(rng), ea, rng);
            const auto b = random_configuration_with_dirline_cp(o.d, o.n, cp(rng), eb, rng);
            const auto r = even->plan(a, b);
            return check_trajectory(r.trajectory, a, b, o.samples, r.region);
        };
    } else if (o.planner == "sphere") {
        sphere.emplace(o.d);
        trial = [&](int i) {
            auto rng = trial_rng(seed, i);
            const SpherePoint a = random_sphere_point(o.d, rng);
            std::optional<SpherePoint> b;
            if (std::bernoulli_distribution(0.25)(rng)) {
                Vector minus = a.coords();
                for (double& x : minus) x = -x;
                b = SpherePoint(minus);
            } else {
                b = random_sphere_point(o.d, rng);
            }
            const auto r = sphere->plan(a, *b);
            return check_trajectory(r.trajectory, a.as_configuration(), b->as_configuration(), o.samples,
                                    {static_cast<int>(r.region)});
        };
    } else if (o.planner == "tree") {
        tree_planner.emplace(load_tree(o.tree_file, o.tree_shape));
        d = 1;
        trial = [&](int i) {
            auto rng = trial_rng(seed, i);
            const Tree& tree = tree_planner->tree();
            const int cap = std::min(tree_planner->essential_count(), o.n);
            std::uniform_int_distribution<int> pinned(0, cap);
            const auto a = random_tree_configuration(tree, o.n, pinned(rng), rng);
            const auto b = random_tree_configuration(tree, o.n, pinned(rng), rng);
            const auto r = tree_planner->plan(a, b);
            return check_tree_trajectory(tree, r.trajectory, a, b, o.samples, r.region);
        };
    } else {
        throw UsageError("unknown planner '" + o.planner + "'");
    }

    const auto reports = check_batch(o.trials, trial);
    int failed = 0;
    double worst_endpoint = 0.0;
    double worst_sep_ratio = kInfinity;
    json failures = json::array();
    json regions = json::object();
    for (std::size_t i = 0; i < reports.size(); ++i) {
        const auto& r = reports[i];
        worst_endpoint = std::max(worst_endpoint, r.relative_endpoint_error());
        if (r.separation_tol > 0) worst_sep_ratio = std::min(worst_sep_ratio, r.min_separation / r.separation_tol);
        regions[std::to_string(r.region.k)] = regions.value(std::to_string(r.region.k), 0) + 1;
        if (!r.pass) {
            ++failed;
            if (failures.size() < 10) failures.push_back({{"trial", i}, {"reason", r.failure}});
        }
    }
    json out{{"planner", o.planner},
             {"n", o.n},
             {"d", d},
             {"seed", seed},
             {"trials", o.trials},
             {"samples", o.samples},
             {"passed", o.trials - failed},
             {"failed", failed},
             {"max_relative_endpoint_error", worst_endpoint},
             {"regions", regions},
             {"failures", failures},
             {"pass", failed == 0}};
    if (std::isfinite(worst_sep_ratio)) out["min_separation_over_tolerance"] = worst_sep_ratio;
    std::cout << out.dump(2) << '\n';
    return failed == 0 ? kOk : kCheckFailed;
}

// ---- tc ----

struct TcOptions {
    std::string family;
    int d = 0;
    int n = 0;
    int k = 1;
    int s = 2;
    int a = 2;
    int genus = 0;
    bool non_orientable = false;
    std::string tree_file;
    std::string tree_shape;
};

json tc_json(const TCValue& v) {
    json out{{"source", v.source}};
    out["value"] = v.value ? json(*v.value) : json("unknown");
    if (!v.value && v.upper_bound) out["upper_bound"] = *v.upper_bound;
    return out;
}

int cmd_tc(const TcOptions& o) {
    json out;
    if (o.family == "euclid") {
        out = tc_json(tc_euclid_config(o.d, o.n));
    } else if (o.family == "tree") {
        out = tc_json(tc_tree_config(load_tree(o.tree_file, o.tree_shape), o.n));
    } else if (o.family == "sphere-product") {
        out = tc_json(tc_sphere_product(o.n, o.k));
    } else if (o.family == "tc-s") {
        out = tc_json(tc_s_euclid(o.s, o.d, o.n));
    } else if (o.family == "surface") {
        out = tc_json(tc_surface(o.genus, !o.non_orientable));
    } else if (o.family == "control") {
        const auto [distributed, centralized] = control_strategy_counts(o.a, o.k);
        out = {{"distributed", distributed}, {"centralized", centralized}};
    } else {
        throw UsageError("unknown family '" + o.family + "'");
    }
    std::cout << out.dump() << '\n';
    return kOk;
}

// ---- qgamma ----

int cmd_qgamma(const std::string& tree_file, const std::string& tree_shape) {
    const Tree tree = load_tree(tree_file, tree_shape);
    const QGammaComplex q = build_qgamma(tree);
    const auto inv = involution(q);
    auto edge_ids = [&](int e) { return json{tree.id_of(tree.edge(e).lower), tree.id_of(tree.edge(e).upper)}; };
    json labels = json::array();
    for (const auto& e : q.edges)
        labels.push_back({{"vertex", tree.id_of(e.vertex)}, {"e", edge_ids(e.first)}, {"e_prime", edge_ids(e.second)}});
    json pairs = json::array();
    for (std::size_t i = 0; i < inv.size(); ++i)
        if (static_cast<int>(i) < inv[i]) pairs.push_back({i, inv[i]});
    const json out{{"edges", q.num_edges()}, {"labels", labels}, {"involution", pairs}, {"b1", betti1_f2(tree)}};
    std::cout << out.dump() << '\n';
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Collision-free motion planning for configuration spaces"};
    app.require_subcommand(1);

    PlanOptions plan;
    auto* plan_cmd = app.add_subcommand("plan", "Plan a motion between two configurations");
    plan_cmd->add_option("--planner", plan.planner, "euclid, euclid-even, sphere or tree")
        ->required()
        ->check(CLI::IsMember({"euclid", "euclid-even", "sphere", "tree"}));
    plan_cmd->add_option("--from", plan.from, "start configuration (JSON file or inline JSON)")->required();
    plan_cmd->add_option("--to", plan.to, "goal configuration (JSON file or inline JSON)")->required();
    plan_cmd->add_option("--tree", plan.tree_file, "tree JSON (tree planner)");
    plan_cmd->add_option("--tree-shape", plan.tree_shape, "built-in tree: y, h or starN");
    plan_cmd->add_option("-o,--output", plan.output, "trajectory output (CSV, or JSON for trees)")->required();
    plan_cmd->add_option("--meta", plan.meta, "metadata output (default: OUTPUT.meta.json)");
    plan_cmd->add_option("--samples", plan.samples, "number of output rows")->check(CLI::Range(2, 10000000));

    VerifyOptions verify;
    auto* verify_cmd = app.add_subcommand("verify", "Check a planner on seeded random pairs");
    verify_cmd->add_option("--planner", verify.planner, "euclid, euclid-even, sphere or tree")
        ->required()
        ->check(CLI::IsMember({"euclid", "euclid-even", "sphere", "tree"}));
    verify_cmd->add_option("-n", verify.n, "number of particles");
    verify_cmd->add_option("-d", verify.d, "ambient dimension");
    verify_cmd->add_option("--trials", verify.trials, "number of random pairs");
    verify_cmd->add_option("--samples", verify.samples, "samples per trajectory");
    verify_cmd->add_option("--tree", verify.tree_file, "tree JSON (tree planner)");
    verify_cmd->add_option("--tree-shape", verify.tree_shape, "built-in tree: y, h or starN");
    verify_cmd->add_option("--seed", verify.seed, "RNG seed (falls back to TCMOTION_SEED)");

    TcOptions tc;
    auto* tc_cmd = app.add_subcommand("tc", "Topological complexity values");
    tc_cmd->add_option("--family", tc.family, "euclid, tree, sphere-product, tc-s, surface or control")->required();
    tc_cmd->add_option("-d", tc.d, "ambient dimension");
    tc_cmd->add_option("-n", tc.n, "number of particles, or sphere dimension for sphere-product");
    tc_cmd->add_option("-k", tc.k, "number of factors or agents");
    tc_cmd->add_option("-s", tc.s, "order of the higher complexity");
    tc_cmd->add_option("-a", tc.a, "regions per agent");
    tc_cmd->add_option("--genus", tc.genus, "surface genus");
    tc_cmd->add_flag("--non-orientable", tc.non_orientable, "non-orientable surface");
    tc_cmd->add_option("--tree", tc.tree_file, "tree JSON");
    tc_cmd->add_option("--tree-shape", tc.tree_shape, "built-in tree: y, h or starN");

    std::string q_tree_file;
    std::string q_tree_shape;
    auto* q_cmd = app.add_subcommand("qgamma", "Two-vertex graph model of F(tree, 2)");
    q_cmd->add_option("--tree", q_tree_file, "tree JSON");
    q_cmd->add_option("--tree-shape", q_tree_shape, "built-in tree: y, h or starN");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (plan_cmd->parsed()) return cmd_plan(plan);
        if (verify_cmd->parsed()) return cmd_verify(verify);
        if (tc_cmd->parsed()) return cmd_tc(tc);
        if (q_cmd->parsed()) return cmd_qgamma(q_tree_file, q_tree_shape);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}
