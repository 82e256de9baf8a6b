#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "qtsp/geometry.hpp"
#include "qtsp/permcode.hpp"
#include "qtsp/rng.hpp"
#include "qtsp/wavesim.hpp"

namespace qtsp {

// Exhaustive table of cyclic tour lengths, indexed by code rank.
struct LengthDistribution {
    int n = 0;
    std::vector<double> lengths;  // size n!

    double min_length() const;
    double max_length() const;
};

// Probability table over all codes of length n, indexed by rank.
struct CodeTable {
    int n = 0;
    std::vector<double> p;
};

// lengths[rank(c)] = tour_length(decode(c)) for every code.
LengthDistribution enumerate_lengths(const NormalizedInstance& inst,
                                     int limit = kEnumerationLimit);
// Serial reference walking codes in odometer order; identical output.
LengthDistribution enumerate_lengths_ref(const NormalizedInstance& inst,
                                         int limit = kEnumerationLimit);

// P(c) proportional to alpha^(-length[c]), normalized to sum 1.
CodeTable boltzmann_exact(const LengthDistribution& dist, Alpha alpha);

InsertionCode boltzmann_sample(const CodeTable& table, Rng& rng);

// One sequential-insertion draw: branch probabilities proportional to
// alpha^(-increment), exactly the weighted circuit's distribution. The
// importance weight alpha^(-L) / q corrects self-normalized averages to the
// exact Boltzmann target; log_weight is the numerically safe form.
struct SisDraw {
    InsertionCode code;
    double length = 0.0;
    double weight = 0.0;
    double log_weight = 0.0;
};
SisDraw sis_sample(const NormalizedInstance& inst, Alpha alpha, Rng& rng);

struct GaussianFit {
    double mu = 0.0;
    double sigma = 0.0;  // unbiased sample standard deviation
    std::size_t sample_count = 0;
};
GaussianFit gaussian_fit(std::span<const double> samples);

// Probability that a Boltzmann draw lands within (1 + eps) of the minimum:
// discrete form sums alpha^(-L) over the table; the quadrature form
// integrates alpha^(-x) g(x) with g the fitted Gaussian over raw length
// coordinates [x_min, x_max]. (h_function below works in the rescaled
// coordinates where g = exp(-x^2): subtract the shifted center, divide
// lengths by the fitted sigma.)
double sigma_ratio(const LengthDistribution& dist, Alpha alpha, double eps);
double sigma_ratio(const GaussianFit& fit, double x_min, double x_max, Alpha alpha,
                   double eps);

// Integral ratio of exp(-t^2) over [x, x+eps_xmin] vs [x, x+range_width].
double h_function(double x, double eps_xmin, double range_width);

// Half the L1 distance between two probability tables.
double tv_distance(const CodeTable& p, const CodeTable& q);

CodeTable wave_code_table(const WaveState& state);

struct HistogramBin {
    double lo = 0.0;
    double hi = 0.0;
    std::uint64_t count = 0;
};
std::vector<HistogramBin> histogram(std::span<const double> values, int bins);

}  // namespace qtsp
