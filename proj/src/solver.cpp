#include "qtsp/solver.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <vector>

namespace qtsp {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr int kHeldKarpLimit = 15;
constexpr std::uint64_t kSampleChunk = 4096;

std::vector<double> distance_matrix(const EuclideanInstance& inst) {
    const int n = inst.size();
    std::vector<double> d(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            d[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) + static_cast<std::size_t>(j)] =
                dist(inst.points[static_cast<std::size_t>(i)], inst.points[static_cast<std::size_t>(j)]);
    return d;
}

// dp cell update shared by both held_karp drivers: city 0 is the fixed
// start, masks always contain bit 0, dp index is mask * n + j.
void held_karp_cell(const std::vector<double>& d, std::vector<double>& dp,
                    std::vector<std::int8_t>& parent, int n, std::uint32_t mask, int j) {
    const std::uint32_t prev = mask ^ (1u << j);
    const std::size_t n_sz = static_cast<std::size_t>(n);
    double best = kInf;
    std::int8_t best_k = 0;
    if (prev == 1u) {
        best = d[static_cast<std::size_t>(j)];  // edge 0 -> j
    } else {
        for (int k = 1; k < n; ++k) {
            if (k == j || !(prev & (1u << k))) continue;
            const double cand = dp[prev * n_sz + static_cast<std::size_t>(k)] +
                                d[static_cast<std::size_t>(k) * n_sz + static_cast<std::size_t>(j)];
            if (cand < best) {
                best = cand;
                best_k = static_cast<std::int8_t>(k);
            }
        }
    }
    dp[mask * n_sz + static_cast<std::size_t>(j)] = best;
    parent[mask * n_sz + static_cast<std::size_t>(j)] = best_k;
}

ExactResult held_karp_finish(const EuclideanInstance& inst, const std::vector<double>& d,
                             const std::vector<double>& dp,
                             const std::vector<std::int8_t>& parent) {
    const int n = inst.size();
    const std::size_t n_sz = static_cast<std::size_t>(n);
    const std::uint32_t full = (1u << n) - 1u;
    double best = kInf;
    int best_j = 1;
    for (int j = 1; j < n; ++j) {
        const double cand = dp[full * n_sz + static_cast<std::size_t>(j)] + d[static_cast<std::size_t>(j) * n_sz];
        if (cand < best) {
            best = cand;
            best_j = j;
        }
    }
    std::vector<int> reversed;
    std::uint32_t mask = full;
    int j = best_j;
    while (j != 0) {
        reversed.push_back(j);
        const int k = parent[mask * n_sz + static_cast<std::size_t>(j)];
        mask ^= 1u << j;
        j = k;
    }
    ExactResult result;
    result.length = best;
    result.tour.order.push_back(1);
    for (auto it = reversed.rbegin(); it != reversed.rend(); ++it)
        result.tour.order.push_back(*it + 1);
    return result;
}

ExactResult held_karp_impl(const EuclideanInstance& inst, bool parallel) {
    validate(inst);
    const int n = inst.size();
    if (n > kHeldKarpLimit)
        throw SizeLimitError("held_karp: n = " + std::to_string(n) + " exceeds limit " +
                             std::to_string(kHeldKarpLimit));
    const std::vector<double> d = distance_matrix(inst);
    const std::uint32_t states = 1u << n;
    std::vector<double> dp(static_cast<std::size_t>(states) * static_cast<std::size_t>(n), kInf);
    std::vector<std::int8_t> parent(dp.size(), 0);

    if (!parallel) {
        for (std::uint32_t mask = 3; mask < states; ++mask) {
            if (!(mask & 1u)) continue;
            for (int j = 1; j < n; ++j)
                if (mask & (1u << j)) held_karp_cell(d, dp, parent, n, mask, j);
        }
        return held_karp_finish(inst, d, dp, parent);
    }

    // Masks of equal popcount form independent layers; a cell only reads the
    // previous layer.
    std::vector<std::vector<std::uint32_t>> layers(static_cast<std::size_t>(n + 1));
    for (std::uint32_t mask = 3; mask < states; ++mask)
        if (mask & 1u) layers[static_cast<std::size_t>(std::popcount(mask))].push_back(mask);
    for (int s = 2; s <= n; ++s) {
        const auto& layer = layers[static_cast<std::size_t>(s)];
        const std::int64_t count = static_cast<std::int64_t>(layer.size());
#pragma omp parallel for schedule(static)
        for (std::int64_t idx = 0; idx < count; ++idx) {
            const std::uint32_t mask = layer[static_cast<std::size_t>(idx)];
            for (int j = 1; j < n; ++j)
                if (mask & (1u << j)) held_karp_cell(d, dp, parent, n, mask, j);
        }
    }
    return held_karp_finish(inst, d, dp, parent);
}

ExactResult brute_force_impl(const EuclideanInstance& inst, int limit, bool parallel) {
    validate(inst);
    const int n = inst.size();
    if (n > limit)
        throw SizeLimitError("brute_force: n = " + std::to_string(n) +
                             " exceeds enumeration limit " + std::to_string(limit));
    const std::uint64_t total = factorial(n);

    struct Best {
        double length = kInf;
        std::uint64_t rank = 0;
    };
    const auto scan = [&](std::uint64_t lo, std::uint64_t hi) {
        Best b;
        for (std::uint64_t r = lo; r < hi; ++r) {
            const double len = tour_length(inst, decode(unrank(r, n)));
            if (len < b.length) {
                b.length = len;
                b.rank = r;
            }
        }
        return b;
    };

    Best best;
    if (!parallel) {
        best = scan(0, total);
    } else {
        // Fixed-size blocks merged in ascending order keep the winner
        // independent of the thread count.
        const std::uint64_t block = 1u << 16;
        const std::uint64_t nblocks = (total + block - 1) / block;
        std::vector<Best> bests(nblocks);
        const std::int64_t nb = static_cast<std::int64_t>(nblocks);
#pragma omp parallel for schedule(dynamic)
        for (std::int64_t b = 0; b < nb; ++b) {
            const std::uint64_t lo = static_cast<std::uint64_t>(b) * block;
            bests[static_cast<std::size_t>(b)] = scan(lo, std::min(total, lo + block));
        }
        for (const Best& b : bests)
            if (b.length < best.length) best = b;
    }
    return {best.length, decode(unrank(best.rank, n))};
}

}  // namespace

ExactResult held_karp(const EuclideanInstance& inst) { return held_karp_impl(inst, true); }
ExactResult held_karp_ref(const EuclideanInstance& inst) { return held_karp_impl(inst, false); }

ExactResult brute_force(const EuclideanInstance& inst, int limit) {
    return brute_force_impl(inst, limit, true);
}
ExactResult brute_force_ref(const EuclideanInstance& inst, int limit) {
    return brute_force_impl(inst, limit, false);
}

double nearest_neighbor_length(const EuclideanInstance& inst) {
    validate(inst);
    const int n = inst.size();
    std::vector<char> visited(static_cast<std::size_t>(n), 0);
    visited[0] = 1;
    int current = 0;
    double total = 0.0;
    for (int step = 1; step < n; ++step) {
        int next = -1;
        double best = kInf;
        for (int j = 0; j < n; ++j) {
            if (visited[static_cast<std::size_t>(j)]) continue;
            const double len = dist(inst.points[static_cast<std::size_t>(current)],
                                    inst.points[static_cast<std::size_t>(j)]);
            if (len < best) {
                best = len;
                next = j;
            }
        }
        visited[static_cast<std::size_t>(next)] = 1;
        total += best;
        current = next;
    }
    return total + dist(inst.points[static_cast<std::size_t>(current)], inst.points[0]);
}

namespace {

struct DrawBest {
    double length = kInf;
    std::uint64_t index = 0;  // global draw index; earliest wins ties
    std::uint64_t rank = 0;
    InsertionCode code;  // used on the SIS path where ranks may overflow
};

// Best of `count` draws from a fixed table, fanned out over fixed-size
// chunks with independent per-chunk streams (chunk c uses rng.spawn(c)).
DrawBest best_of_table(const LengthDistribution& dist, const CumulativeTable& cdf,
                       std::uint64_t count, const Rng& rng) {
    const std::uint64_t nchunks = (count + kSampleChunk - 1) / kSampleChunk;
    std::vector<DrawBest> bests(nchunks);
    const std::int64_t nc = static_cast<std::int64_t>(nchunks);
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t c = 0; c < nc; ++c) {
        Rng stream = rng.spawn(static_cast<std::uint64_t>(c));
        const std::uint64_t lo = static_cast<std::uint64_t>(c) * kSampleChunk;
        const std::uint64_t hi = std::min(count, lo + kSampleChunk);
        DrawBest local;
        for (std::uint64_t i = lo; i < hi; ++i) {
            const std::uint64_t r = cdf.sample(stream);
            const double len = dist.lengths[r];
            if (len < local.length) {
                local.length = len;
                local.index = i;
                local.rank = r;
            }
        }
        bests[static_cast<std::size_t>(c)] = local;
    }
    DrawBest best;
    for (const DrawBest& b : bests)
        if (b.length < best.length) best = b;
    return best;
}

DrawBest best_of_sis(const NormalizedInstance& inst, Alpha alpha, std::uint64_t count,
                     const Rng& rng, Rng& resample_rng) {
    const std::uint64_t nchunks = (count + kSampleChunk - 1) / kSampleChunk;
    std::vector<std::vector<SisDraw>> chunks(nchunks);
    const std::int64_t nc = static_cast<std::int64_t>(nchunks);
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t c = 0; c < nc; ++c) {
        Rng stream = rng.spawn(static_cast<std::uint64_t>(c));
        const std::uint64_t lo = static_cast<std::uint64_t>(c) * kSampleChunk;
        const std::uint64_t hi = std::min(count, lo + kSampleChunk);
        auto& out = chunks[static_cast<std::size_t>(c)];
        out.reserve(hi - lo);
        for (std::uint64_t i = lo; i < hi; ++i) out.push_back(sis_sample(inst, alpha, stream));
    }
    std::vector<SisDraw> draws;
    draws.reserve(count);
    for (auto& chunk : chunks)
        for (auto& d : chunk) draws.push_back(std::move(d));

    // Importance resampling toward the Boltzmann target, then best-of.
    double max_log = -kInf;
    for (const SisDraw& d : draws) max_log = std::max(max_log, d.log_weight);
    std::vector<double> weights(draws.size());
    for (std::size_t i = 0; i < draws.size(); ++i)
        weights[i] = std::exp(draws[i].log_weight - max_log);
    const CumulativeTable cdf{weights};
    DrawBest best;
    for (std::uint64_t i = 0; i < count; ++i) {
        const std::size_t pick = cdf.sample(resample_rng);
        if (draws[pick].length < best.length) {
            best.length = draws[pick].length;
            best.index = i;
            best.code = draws[pick].code;
        }
    }
    return best;
}

}  // namespace

SolveResult solve_gaussian(const NormalizedInstance& inst, double epsilon,
                           const GaussianParams& params, Rng& rng) {
    validate(inst);
    if (epsilon <= 0.0) throw RangeError("solve_gaussian: epsilon must be positive");
    const int n = inst.size();
    SolveResult result;
    result.seed = rng.seed();

    if (n <= 3) {
        // A cycle on at most 3 points is unique up to relabeling.
        result.tour = decode(unrank(0, n));
        result.length = tour_length(inst, result.tour);
        return result;
    }

    if (params.pilot < 2) throw UsageError("solve_gaussian: pilot must be at least 2");
    std::vector<double> pilot_lengths;
    pilot_lengths.reserve(params.pilot);
    double best_pilot = kInf;
    InsertionCode scratch;
    scratch.entries.resize(static_cast<std::size_t>(n));
    for (std::uint64_t d = 0; d < params.pilot; ++d) {
        for (int i = 0; i < n; ++i)
            scratch.entries[static_cast<std::size_t>(i)] =
                1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(i) + 1));
        const double len = tour_length(inst, decode(scratch));
        pilot_lengths.push_back(len);
        best_pilot = std::min(best_pilot, len);
    }
    const GaussianFit fit = gaussian_fit(pilot_lengths);
    const double x_min_hat = std::min(best_pilot, nearest_neighbor_length(inst));

    const Alpha alpha = params.alpha
                            ? Alpha(*params.alpha)
                            : Alpha::from_log((fit.mu - x_min_hat) / (fit.sigma * fit.sigma));
    const double ratio = fit.sigma / x_min_hat;
    const std::uint64_t repetitions =
        params.repetitions
            ? *params.repetitions
            : static_cast<std::uint64_t>(std::max(
                  1.0, std::ceil(params.c * ratio * ratio * std::log(1.0 / params.fail) /
                                 (epsilon * epsilon))));

    if (n <= kEnumerationLimit) {
        const LengthDistribution table_dist = enumerate_lengths(inst);
        const CodeTable table = boltzmann_exact(table_dist, alpha);
        const CumulativeTable cdf{table.p};
        const DrawBest best = best_of_table(table_dist, cdf, repetitions, rng);
        result.tour = decode(unrank(best.rank, n));
        result.length = table_dist.lengths[best.rank];
    } else {
        Rng resample_rng = rng.spawn(~0ull);
        const DrawBest best = best_of_sis(inst, alpha, repetitions, rng, resample_rng);
        result.tour = decode(best.code);
        result.length = tour_length(inst, result.tour);
    }
    result.samples_used = params.pilot + repetitions;
    return result;
}

BinIndexing BinIndexing::make(int n, double eps) {
    if (n < 2) throw RangeError("BinIndexing: n must be at least 2");
    if (eps <= 0.0) throw RangeError("BinIndexing: eps must be positive");
    BinIndexing bins;
    bins.eps = eps;
    bins.count = static_cast<int>(std::ceil((std::sqrt(2.0) * n - 2.0) / eps));
    return bins;
}

int bin_of(double length, const BinIndexing& bins) {
    if (length < bins.lo - 1e-9)
        throw RangeError("bin_of: length " + std::to_string(length) + " below " +
                         std::to_string(bins.lo));
    const int raw = static_cast<int>(std::floor((length - bins.lo + 1e-9) / bins.eps)) + 1;
    return std::clamp(raw, 1, bins.count);
}

SolveResult solve_oracle(const NormalizedInstance& inst, double epsilon,
                         const OracleSolveOptions& options, Rng& rng) {
    validate(inst);
    if (epsilon <= 0.0) throw RangeError("solve_oracle: epsilon must be positive");
    if (options.sampled_trials && (*options.sampled_trials < 1 || *options.sampled_trials % 2 == 0))
        throw UsageError("solve_oracle: sampled trials must be odd and positive");
    const int n = inst.size();
    const LengthDistribution dist = enumerate_lengths(inst);
    const BinIndexing bins = BinIndexing::make(n, epsilon);

    SolveResult result;
    result.seed = rng.seed();
    int i0 = 0;
    for (int i = 1; i <= bins.count; ++i) {
        const RangeQuery q{bins.bin_lo(i), bins.bin_hi(i), epsilon};
        ++result.oracle_calls;
        bool admitted;
        if (options.sampled_trials) {
            const auto [m, total] = count_in_range(dist, q, options.policy);
            admitted = oracle_repeated(m, total, *options.sampled_trials, rng).answer;
        } else {
            admitted = oracle_exact(dist, q, options.policy);
        }
        if (admitted) {
            i0 = i;
            break;
        }
    }
    if (i0 == 0) throw SearchFailureError("solve_oracle: no range admitted a tour");

    const RangeQuery projected{bins.bin_lo(i0), bins.bin_hi(i0), epsilon};
    std::vector<std::uint64_t> candidates;
    for (std::uint64_t r = 0; r < dist.lengths.size(); ++r)
        if (in_range(dist.lengths[r], projected, options.policy)) candidates.push_back(r);
    if (candidates.empty())
        throw SearchFailureError("solve_oracle: projection onto an empty range (bin " +
                                 std::to_string(i0) + ")");
    const std::uint64_t pick = candidates[rng.below(candidates.size())];
    result.tour = decode(unrank(pick, n));
    result.length = dist.lengths[pick];
    result.samples_used = 1;
    result.bin_index = i0;
    return result;
}

void attach_baseline(SolveResult& result, const EuclideanInstance& inst) {
    const ExactResult exact = held_karp(inst);
    result.opt = exact.length;
    result.opt_gap = result.length - exact.length;
}

}  // namespace qtsp
