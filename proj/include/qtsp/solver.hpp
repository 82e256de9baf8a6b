#pragma once

#include <cstdint>
#include <optional>

#include "qtsp/distsim.hpp"
#include "qtsp/geometry.hpp"
#include "qtsp/oracle.hpp"
#include "qtsp/permcode.hpp"
#include "qtsp/rng.hpp"

namespace qtsp {

struct SolveResult {
    Permutation tour;
    double length = 0.0;
    std::uint64_t samples_used = 0;
    std::uint64_t oracle_calls = 0;
    std::optional<double> opt;      // exact optimum, when a baseline was run
    std::optional<double> opt_gap;  // length - opt
    std::optional<int> bin_index;   // i_0 of the range scan (oracle solver)
    std::uint64_t seed = 0;
};

struct ExactResult {
    double length = 0.0;
    Permutation tour;
};

// Exact optimum by bitmask dynamic programming over subsets, 2 <= n <= 15.
ExactResult held_karp(const EuclideanInstance& inst);
// Serial reference; identical dp arithmetic, identical result.
ExactResult held_karp_ref(const EuclideanInstance& inst);

// Minimum over all enumerated codes. Independent check for held_karp.
ExactResult brute_force(const EuclideanInstance& inst, int limit = kEnumerationLimit);
ExactResult brute_force_ref(const EuclideanInstance& inst, int limit = kEnumerationLimit);

// Greedy nearest-neighbor tour from the first point; cheap upper bound on
// the optimal length used to seed the tilt.
double nearest_neighbor_length(const EuclideanInstance& inst);

struct GaussianParams {
    std::optional<double> alpha;             // tilt base; fitted when unset
    std::optional<std::uint64_t> repetitions;  // sample count K; fitted when unset
    std::uint64_t pilot = 10000;             // uniform pilot draws for the fit
    double c = 4.0;                          // constant in the K formula
    double fail = 1e-3;                      // target failure probability in K
};

// Tilted-sampling solver. Pilot phase fits the tour-length Gaussian and
// estimates x_min; unless overridden, ln(alpha) = (mu - x_min) / sigma^2
// (centering the tilted Gaussian at x_min) and
// K = ceil(c * (sigma/x_min)^2 * ln(1/fail) / eps^2). Draws K samples from
// the exact Boltzmann table when n is within the enumeration limit, or by
// sequential-insertion importance resampling beyond it, and keeps the best.
SolveResult solve_gaussian(const NormalizedInstance& inst, double epsilon,
                           const GaussianParams& params, Rng& rng);

// Tour-length ranges of width eps tiling [2, sqrt(2) n), numbered from 1.
struct BinIndexing {
    double lo = 2.0;
    double eps = 0.0;
    int count = 0;

    static BinIndexing make(int n, double eps);
    double bin_lo(int i) const { return lo + (i - 1) * eps; }
    double bin_hi(int i) const { return lo + i * eps; }
};

// Bin holding the given length: floor((length - 2)/eps) + 1, boundary
// lengths snapping to the higher bin, clamped to [1, count].
int bin_of(double length, const BinIndexing& bins);

struct OracleSolveOptions {
    // Number of majority-vote trials per range query; unset means the ideal
    // exact oracle. The sampled oracle is faithful to its fair-coin behavior
    // on empty ranges, so scans that must pass empty bins fail often; that
    // limitation is inherent, not a bug.
    std::optional<std::size_t> sampled_trials;
    SlackPolicy policy = SlackPolicy::strict;
};

// Range-scan solver: queries bins in order, sets i_0 to the first admitted
// bin, then projects by sampling uniformly among the codes whose length lies
// in that bin (plus the delta slack under the permissive policy).
SolveResult solve_oracle(const NormalizedInstance& inst, double epsilon,
                         const OracleSolveOptions& options, Rng& rng);

// Fills opt / opt_gap from held_karp.
void attach_baseline(SolveResult& result, const EuclideanInstance& inst);

}  // namespace qtsp
