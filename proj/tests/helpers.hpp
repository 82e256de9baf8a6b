#pragma once

#include <cmath>
#include <vector>

#include "qtsp/distsim.hpp"
#include "qtsp/geometry.hpp"
#include "qtsp/permcode.hpp"
#include "qtsp/rng.hpp"
#include "qtsp/wavesim.hpp"

namespace qtsp::test {

// Four corners of the unit square: 24 codes, 8 of length 4 (perimeter) and
// 16 of length 2 + 2*sqrt(2) (the two crossing tours).
inline NormalizedInstance corners_instance() {
    EuclideanInstance inst;
    inst.name = "corners";
    inst.points = {{0, 0}, {0, 1}, {1, 0}, {1, 1}};
    return normalize(inst);
}

inline NormalizedInstance triangle_instance() {
    EuclideanInstance inst;
    inst.name = "triangle";
    inst.points = {{0, 0}, {1, 0}, {0, 1}};
    return normalize(inst);
}

inline NormalizedInstance random_instance(int n, std::uint64_t seed) {
    return normalize(generate(InstanceKind::uniform, n, seed));
}

// Recomputes the tilted-wave probability of one code by walking its
// insertion sequence directly: at each step the branch weight is
// alpha^(-increment), renormalized within the branch. Independent of the
// gate-based state evolution.
inline double weighted_product_probability(const NormalizedInstance& inst, Alpha alpha,
                                           const InsertionCode& code) {
    const double log_alpha = alpha.log();
    std::vector<int> partial{1};
    double prob = 1.0;
    for (int i = 2; i <= code.size(); ++i) {
        double total = 0.0;
        double picked = 0.0;
        const int pick = code.entries[static_cast<std::size_t>(i - 1)];
        for (int j = 1; j <= i; ++j) {
            const double w =
                std::exp(-log_alpha * insertion_increment(inst, partial, i, j));
            total += w;
            if (j == pick) picked = w;
        }
        prob *= picked / total;
        partial.insert(partial.begin() + (pick - 1), i);
    }
    return prob;
}

// Standard normal draws for fit tests.
inline std::vector<double> normal_draws(double mu, double sigma, std::size_t count,
                                        Rng& rng) {
    std::vector<double> out;
    out.reserve(count);
    while (out.size() < count) {
        const double u1 = rng.uniform();
        const double u2 = rng.uniform();
        const double r = std::sqrt(-2.0 * std::log(1.0 - u1));
        out.push_back(mu + sigma * r * std::cos(6.283185307179586 * u2));
        if (out.size() < count)
            out.push_back(mu + sigma * r * std::sin(6.283185307179586 * u2));
    }
    return out;
}

// Wilson-Hilferty upper quantile of chi-square with df degrees of freedom;
// z is the standard-normal quantile of the target significance.
inline double chi_square_critical(double df, double z) {
    const double a = 2.0 / (9.0 * df);
    const double c = 1.0 - a + z * std::sqrt(a);
    return df * c * c * c;
}

}  // namespace qtsp::test
