#include <doctest.h>

#include <cmath>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "helpers.hpp"
#include "qtsp/distsim.hpp"
#include "qtsp/solver.hpp"
#include "qtsp/wavesim.hpp"

using namespace qtsp;

namespace {

void check_same_wave(const WaveState& a, const WaveState& b) {
    REQUIRE(a.depth == b.depth);
    REQUIRE(a.amps.size() == b.amps.size());
    for (std::size_t r = 0; r < a.amps.size(); ++r) {
        CHECK(a.amps[r].real() == b.amps[r].real());
        CHECK(a.amps[r].imag() == b.amps[r].imag());
    }
}

}  // namespace

TEST_CASE("weighted wave preparation matches its serial reference bitwise") {
    const NormalizedInstance inst = test::random_instance(7, 51);
    const Alpha alpha(std::exp(1.3));
    check_same_wave(prepare_weighted(inst, alpha), prepare_weighted_ref(inst, alpha));
}

TEST_CASE("length enumeration matches its serial reference bitwise") {
    const NormalizedInstance inst = test::random_instance(8, 52);
    const LengthDistribution par = enumerate_lengths(inst);
    const LengthDistribution ser = enumerate_lengths_ref(inst);
    REQUIRE(par.lengths.size() == ser.lengths.size());
    for (std::size_t r = 0; r < par.lengths.size(); ++r)
        CHECK(par.lengths[r] == ser.lengths[r]);
}

TEST_CASE("subset dynamic programming matches its serial reference") {
    const NormalizedInstance inst = test::random_instance(12, 53);
    const ExactResult par = held_karp(inst);
    const ExactResult ser = held_karp_ref(inst);
    CHECK(par.length == ser.length);
    CHECK(par.tour == ser.tour);
}

TEST_CASE("enumeration search matches its serial reference") {
    const NormalizedInstance inst = test::random_instance(8, 54);
    const ExactResult par = brute_force(inst);
    const ExactResult ser = brute_force_ref(inst);
    CHECK(par.length == ser.length);
    CHECK(par.tour == ser.tour);
}

#ifdef _OPENMP
TEST_CASE("results are independent of the thread count") {
    const NormalizedInstance small = test::random_instance(7, 55);
    const NormalizedInstance large = test::random_instance(11, 56);
    const Alpha alpha(std::exp(1.0));

    struct Snapshot {
        WaveState wave;
        LengthDistribution dist;
        ExactResult exact;
        SolveResult table_solve;
        SolveResult sis_solve;
    };
    const auto snapshot = [&] {
        Snapshot s;
        s.wave = prepare_weighted(small, alpha);
        s.dist = enumerate_lengths(small);
        s.exact = held_karp(large);
        GaussianParams params;
        params.pilot = 500;
        Rng table_rng(5);
        s.table_solve = solve_gaussian(small, 0.25, params, table_rng);
        GaussianParams sis_params;
        sis_params.alpha = std::exp(2.0);
        sis_params.repetitions = 6000;  // spans two sample chunks
        sis_params.pilot = 300;
        Rng sis_rng(6);
        s.sis_solve = solve_gaussian(large, 0.3, sis_params, sis_rng);
        return s;
    };

    const int saved = omp_get_max_threads();
    omp_set_num_threads(1);
    const Snapshot base = snapshot();
    for (int threads : {2, 4}) {
        omp_set_num_threads(threads);
        const Snapshot now = snapshot();
        CAPTURE(threads);
        check_same_wave(now.wave, base.wave);
        REQUIRE(now.dist.lengths.size() == base.dist.lengths.size());
        for (std::size_t r = 0; r < now.dist.lengths.size(); ++r)
            CHECK(now.dist.lengths[r] == base.dist.lengths[r]);
        CHECK(now.exact.length == base.exact.length);
        CHECK(now.exact.tour == base.exact.tour);
        CHECK(now.table_solve.tour == base.table_solve.tour);
        CHECK(now.table_solve.length == base.table_solve.length);
        CHECK(now.sis_solve.tour == base.sis_solve.tour);
        CHECK(now.sis_solve.length == base.sis_solve.length);
    }
    omp_set_num_threads(saved);
}
#endif
