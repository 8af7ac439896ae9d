// Times the OpenMP verification kernels against their serial references on
// identical workloads and checks that both produce the same numbers.
//
// usage: bench_verify [trials] [samples]

#include <omp.h>

#include <cstdio>
#include <cstdlib>
#include <random>
#include <vector>

#include "tcmotion/euclid_planner.hpp"
#include "tcmotion/verification.hpp"

using namespace tcmotion;

namespace {

struct Workload {
    std::vector<Configuration> from;
    std::vector<Configuration> to;
    std::vector<Trajectory> plans;
};

Workload make_workload(int trials, int dim, int n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    const EuclidPlanner planner(dim, n);
    std::uniform_int_distribution<int> cp(1, n);
    Workload w;
    for (int i = 0; i < trials; ++i) {
        w.from.push_back(random_configuration_with_cp(dim, n, cp(rng), rng));
        w.to.push_back(random_configuration_with_cp(dim, n, cp(rng), rng));
        w.plans.push_back(planner.plan(w.from.back(), w.to.back()).trajectory);
    }
    return w;
}

template <class F>
double time_it(F&& f) {
    const double t0 = omp_get_wtime();
    f();
    return omp_get_wtime() - t0;
}

}  // namespace

int main(int argc, char** argv) {
    const int trials = argc > 1 ? std::atoi(argv[1]) : 200;
    const int samples = argc > 2 ? std::atoi(argv[2]) : 1000;
    const Workload w = make_workload(trials, 3, 4, 7);

    double sep_par = 0.0, sep_ser = 0.0;
    const double t_par = time_it([&] {
        for (const auto& p : w.plans) sep_par += sampled_min_separation(p, samples);
    });
    const double t_ser = time_it([&] {
        for (const auto& p : w.plans) sep_ser += sampled_min_separation_serial(p, samples);
    });

    auto trial = [&](int i) { return check_trajectory_serial(w.plans[i], w.from[i], w.to[i], samples); };
    std::vector<CheckReport> batch_par, batch_ser;
    const double b_par = time_it([&] { batch_par = check_batch(trials, trial); });
    const double b_ser = time_it([&] { batch_ser = check_batch_serial(trials, trial); });

    bool same = sep_par == sep_ser;
    for (int i = 0; i < trials; ++i) same = same && batch_par[i].min_separation == batch_ser[i].min_separation;

    std::printf("threads: %d  trials: %d  samples: %d\n", omp_get_max_threads(), trials, samples);
    std::printf("%-22s %12s %12s %9s\n", "kernel", "openmp [s]", "serial [s]", "speedup");
    std::printf("%-22s %12.4f %12.4f %9.2f\n", "sampled separation", t_par, t_ser, t_ser / t_par);
    std::printf("%-22s %12.4f %12.4f %9.2f\n", "trial batch", b_par, b_ser, b_ser / b_par);
    std::printf("results identical: %s\n", same ? "yes" : "no");
    return same ? 0 : 1;
}
