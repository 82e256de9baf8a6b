#include "qtsp/oracle.hpp"

#include <cmath>
#include <string>

namespace qtsp {

namespace {
constexpr double kBoundaryTol = 1e-9;
}

void validate(const RangeQuery& q) {
    if (!(q.lo < q.hi)) throw RangeError("RangeQuery: lo must be below hi");
    if (q.delta < 0.0) throw RangeError("RangeQuery: delta must be nonnegative");
}

bool in_range(double length, const RangeQuery& q, SlackPolicy policy) {
    const double effective = length + kBoundaryTol;
    const double hi = policy == SlackPolicy::permissive ? q.hi + q.delta : q.hi;
    return effective >= q.lo && effective < hi;
}

std::pair<std::uint64_t, std::uint64_t> count_in_range(const LengthDistribution& dist,
                                                       const RangeQuery& q,
                                                       SlackPolicy policy) {
    validate(q);
    std::uint64_t m = 0;
    for (double length : dist.lengths)
        if (in_range(length, q, policy)) ++m;
    return {m, dist.lengths.size()};
}

double both_zero_probability(std::uint64_t m, std::uint64_t N) {
    if (N < 1) throw RangeError("both_zero_probability: N must be at least 1");
    if (m > N)
        throw RangeError("both_zero_probability: m = " + std::to_string(m) +
                         " exceeds N = " + std::to_string(N));
    const double frac = static_cast<double>(m) / static_cast<double>(N);
    const double diff = std::sqrt(1.0 - frac) - std::sqrt(frac);
    return (1.0 - frac) * diff * diff / 2.0;
}

bool oracle_sample(std::uint64_t m, std::uint64_t N, Rng& rng) {
    return rng.uniform() >= both_zero_probability(m, N);
}

OracleOutcome oracle_repeated(std::uint64_t m, std::uint64_t N, std::size_t trials,
                              Rng& rng) {
    if (trials < 1 || trials % 2 == 0)
        throw UsageError("oracle_repeated: trials must be odd and positive");
    OracleOutcome outcome;
    outcome.trials = trials;
    for (std::size_t i = 0; i < trials; ++i)
        if (oracle_sample(m, N, rng)) ++outcome.true_count;
    outcome.answer = outcome.true_count * 2 > trials;
    return outcome;
}

bool oracle_exact(const LengthDistribution& dist, const RangeQuery& q, SlackPolicy policy) {
    return count_in_range(dist, q, policy).first > 0;
}

}  // namespace qtsp
