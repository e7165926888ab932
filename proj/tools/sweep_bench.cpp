// Benchmark: serial reference executor vs the OpenMP sweep executor on the
// same job list. Usage: sdnlb_sweep_bench [scenario] [seeds] [repeats]

#include <chrono>
#include <cstdio>
#include <cstdlib>

#include <omp.h>

#include "sdnlb/scenario.hpp"
#include "sdnlb/sweep.hpp"

using namespace sdnlb;

namespace {

double time_once(const Scenario& sc, const std::vector<SweepJob>& jobs, bool parallel) {
    auto start = std::chrono::steady_clock::now();
    auto results = parallel ? run_sweep_parallel(sc, jobs) : run_sweep_serial(sc, jobs);
    auto stop = std::chrono::steady_clock::now();
    if (results.size() != jobs.size()) std::abort();
    return std::chrono::duration<double, std::milli>(stop - start).count();
}

}  // namespace

int main(int argc, char** argv) {
    std::string path = argc > 1 ? argv[1] : "scenarios/fig4.scenario";
    int n_seeds = argc > 2 ? std::atoi(argv[2]) : 64;
    int repeats = argc > 3 ? std::atoi(argv[3]) : 5;

    Scenario sc;
    try {
        sc = load_scenario(path);
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }

    std::vector<std::uint64_t> seeds;
    for (int s = 1; s <= n_seeds; ++s) seeds.push_back(static_cast<std::uint64_t>(s));
    auto jobs = make_jobs(
        {PolicyKind::RL_LBM, PolicyKind::DC_LBM, PolicyKind::MMO_LBM, PolicyKind::NONE}, seeds);

    std::printf("scenario %s: %zu jobs (%d seeds x 4 policies), %d rounds, %d threads\n",
                sc.name.c_str(), jobs.size(), n_seeds, sc.rounds, omp_get_max_threads());

    // Warm-up pass keeps first-touch costs out of the numbers.
    time_once(sc, jobs, false);
    time_once(sc, jobs, true);

    double serial_best = 1e300, parallel_best = 1e300;
    for (int r = 0; r < repeats; ++r) {
        double s = time_once(sc, jobs, false);
        double p = time_once(sc, jobs, true);
        if (s < serial_best) serial_best = s;
        if (p < parallel_best) parallel_best = p;
        std::printf("  repeat %d: serial %8.2f ms   openmp %8.2f ms\n", r, s, p);
    }
    std::printf("best: serial %.2f ms, openmp %.2f ms, speedup %.2fx\n", serial_best,
                parallel_best, serial_best / parallel_best);
    return 0;
}
