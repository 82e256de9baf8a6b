// Times the parallel kernels against their serial reference twins and checks
// that both produce identical results. Run from the build tree: ./bench
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "qtsp/distsim.hpp"
#include "qtsp/geometry.hpp"
#include "qtsp/solver.hpp"
#include "qtsp/wavesim.hpp"

namespace {

using Clock = std::chrono::steady_clock;

double best_ms(const std::function<void()>& fn, int reps) {
    double best = 1e300;
    for (int r = 0; r < reps; ++r) {
        const auto t0 = Clock::now();
        fn();
        const auto t1 = Clock::now();
        best = std::min(best, std::chrono::duration<double, std::milli>(t1 - t0).count());
    }
    return best;
}

void report(const std::string& name, double serial_ms, double parallel_ms, bool identical) {
    std::printf("%-24s %10.2f ms %10.2f ms   x%-6.2f %s\n", name.c_str(), serial_ms,
                parallel_ms, serial_ms / parallel_ms, identical ? "identical" : "MISMATCH");
}

}  // namespace

int main() {
    using namespace qtsp;
    const int reps = 3;
    std::printf("%-24s %13s %13s   %-7s %s\n", "kernel", "serial", "parallel", "speedup",
                "check");

    {
        const NormalizedInstance inst = normalize(generate(InstanceKind::uniform, 9, 7));
        LengthDistribution a, b;
        const double s = best_ms([&] { a = enumerate_lengths_ref(inst); }, reps);
        const double p = best_ms([&] { b = enumerate_lengths(inst); }, reps);
        report("enumerate_lengths n=9", s, p, a.lengths == b.lengths);
    }
    {
        const EuclideanInstance inst = generate(InstanceKind::uniform, 13, 7);
        ExactResult a, b;
        const double s = best_ms([&] { a = held_karp_ref(inst); }, reps);
        const double p = best_ms([&] { b = held_karp(inst); }, reps);
        report("held_karp n=13", s, p, a.length == b.length && a.tour == b.tour);
    }
    {
        const EuclideanInstance inst = generate(InstanceKind::uniform, 9, 7);
        ExactResult a, b;
        const double s = best_ms([&] { a = brute_force_ref(inst); }, reps);
        const double p = best_ms([&] { b = brute_force(inst); }, reps);
        report("brute_force n=9", s, p, a.length == b.length && a.tour == b.tour);
    }
    {
        const NormalizedInstance inst = normalize(generate(InstanceKind::uniform, 9, 7));
        const Alpha alpha(std::exp(1.0));
        WaveState a, b;
        const double s = best_ms([&] { a = prepare_weighted_ref(inst, alpha); }, reps);
        const double p = best_ms([&] { b = prepare_weighted(inst, alpha); }, reps);
        report("prepare_weighted n=9", s, p, a.amps == b.amps);
    }
    return 0;
}
