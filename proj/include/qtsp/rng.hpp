#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "qtsp/errors.hpp"

namespace qtsp {

// Deterministic random source used throughout the project.
//
// The generator is std::mt19937_64, whose raw 64-bit output sequence is
// fixed by the standard, seeded directly with the given seed. Derived
// quantities (doubles, bounded ints) are computed from raw outputs here
// rather than through std::*_distribution, so identical seeds give
// identical draws on every platform.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : seed_(seed), gen_(seed) {}

    std::uint64_t seed() const { return seed_; }

    std::uint64_t next() { return gen_(); }

    // Uniform double in [0, 1), 53 random mantissa bits.
    double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

    // Unbiased integer in [0, n) by rejection.
    std::uint64_t below(std::uint64_t n) {
        if (n == 0) throw RangeError("Rng::below: bound must be positive");
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t x;
        do {
            x = gen_();
        } while (x >= limit);
        return x % n;
    }

    // Integer in [lo, hi] inclusive.
    std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {
        if (lo > hi) throw RangeError("Rng::uniform_int: empty range");
        return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo) + 1));
    }

    // Child stream for parallel fan-out. Stream i is a fixed function of the
    // root seed and i alone, so results do not depend on thread count or on
    // how much the parent stream has already been consumed.
    Rng spawn(std::uint64_t stream) const {
        std::uint64_t z = seed_ + (stream + 1) * 0x9E3779B97F4A7C15ull;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        z = z ^ (z >> 31);
        return Rng(z);
    }

private:
    std::uint64_t seed_;
    std::mt19937_64 gen_;
};

// Cumulative-sum table for repeated draws from a fixed discrete
// distribution. Accepts unnormalized nonnegative weights.
class CumulativeTable {
public:
    explicit CumulativeTable(std::span<const double> weights) {
        cdf_.reserve(weights.size());
        double acc = 0.0;
        for (double w : weights) {
            acc += w;
            cdf_.push_back(acc);
        }
        if (cdf_.empty() || acc <= 0.0)
            throw RangeError("CumulativeTable: weights must have positive total");
    }

    std::size_t size() const { return cdf_.size(); }

    std::size_t sample(Rng& rng) const {
        const double u = rng.uniform() * cdf_.back();
        std::size_t lo = 0, hi = cdf_.size() - 1;
        while (lo < hi) {
            const std::size_t mid = (lo + hi) / 2;
            if (cdf_[mid] <= u)
                lo = mid + 1;
            else
                hi = mid;
        }
        return lo;
    }

private:
    std::vector<double> cdf_;
};

}  // namespace qtsp
