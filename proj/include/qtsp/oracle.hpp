#pragma once

#include <cstdint>
#include <utility>

#include "qtsp/distsim.hpp"
#include "qtsp/rng.hpp"

namespace qtsp {

// Tour-length interval [lo, hi) with verifier precision slack delta: a "yes"
// only certifies a length in [lo, hi + delta).
struct RangeQuery {
    double lo = 0.0;
    double hi = 0.0;
    double delta = 0.0;
};
void validate(const RangeQuery& q);

// Whether lengths in the slack band [hi, hi + delta) count as inside the
// range. Strict counts [lo, hi) only; permissive counts [lo, hi + delta).
enum class SlackPolicy { strict, permissive };

// Half-open membership with lengths within 1e-9 of a boundary snapped onto
// it, so a length that is exactly a boundary up to rounding lands in the
// higher range.
bool in_range(double length, const RangeQuery& q, SlackPolicy policy = SlackPolicy::strict);

// (m, N): number of code ranks whose length falls in the query range, out of
// N = n! total.
std::pair<std::uint64_t, std::uint64_t> count_in_range(const LengthDistribution& dist,
                                                       const RangeQuery& q,
                                                       SlackPolicy policy = SlackPolicy::strict);

// Probability that both validity qubits of the two-machine range tester read
// zero: (1 - m/N) * (sqrt(1 - m/N) - sqrt(m/N))^2 / 2. Equals 1/2 exactly
// when m = 0 and is strictly below 1/2 otherwise, which is what makes the
// answer informative and the gap hard to amplify.
double both_zero_probability(std::uint64_t m, std::uint64_t N);

// One run of the composite machine: false with both_zero_probability(m, N).
bool oracle_sample(std::uint64_t m, std::uint64_t N, Rng& rng);

struct OracleOutcome {
    bool answer = false;
    std::size_t trials = 0;
    std::size_t true_count = 0;
};

// Majority vote over an odd number of runs. The vote cannot make an m = 0
// query reliable: per-trial true probability is exactly 1/2 there, so the
// verdict is a fair coin no matter how many trials are taken.
OracleOutcome oracle_repeated(std::uint64_t m, std::uint64_t N, std::size_t trials, Rng& rng);

// The ideal oracle the range-search solver assumes: is any tour in range?
bool oracle_exact(const LengthDistribution& dist, const RangeQuery& q,
                  SlackPolicy policy = SlackPolicy::strict);

}  // namespace qtsp
